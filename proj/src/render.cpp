#include "rsbf/render.hpp"

#include <sstream>

#include <json.hpp>

#include "rsbf/error.hpp"

namespace rsbf::render {

using json = nlohmann::ordered_json;

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "pretty") return OutputFormat::pretty;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace {

json triple_json(const mrs::CubicTriple& f) { return json::array({1, f.j(), f.k()}); }

std::string members_text(const std::vector<mrs::CubicTriple>& members) {
  std::string out;
  for (const auto& f : members) {
    if (!out.empty()) out += ' ';
    out += f.to_string();
  }
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string counted(std::size_t count, std::string_view one, std::string_view many) {
  return std::to_string(count) + ' ' + std::string(count == 1 ? one : many);
}

std::string classes_noun(std::size_t count) { return counted(count, "class", "classes"); }
std::string functions_noun(std::size_t count) { return counted(count, "function", "functions"); }

json invariant_fields(json obj, const structure::ClassInvariants& inv, bool verbose) {
  obj["weight"] = inv.weight;
  obj["nonlinearity"] = inv.nonlinearity;
  obj["profile_digest"] = inv.profile_digest;
  if (verbose) {
    json profile = json::array();
    for (const auto& [value, count] : inv.profile.entries) profile.push_back({value, count});
    obj["profile"] = std::move(profile);
  }
  return obj;
}

}  // namespace

std::string classes(const orbits::ClassTable& table, OutputFormat fmt,
                    const std::vector<structure::ClassInvariants>* invariants) {
  if (invariants && invariants->size() != table.classes.size()) {
    throw InternalError("invariant rows do not match class table");
  }
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty: {
      std::size_t total = 0;
      for (const auto& c : table.classes) total += c.size();
      os << "n = " << table.n << ": " << classes_noun(table.classes.size()) << ", "
         << functions_noun(total) << '\n';
      for (std::size_t i = 0; i < table.classes.size(); ++i) {
        const auto& c = table.classes[i];
        os << "Class " << i + 1 << ", size " << c.size() << ": " << members_text(c.members);
        if (invariants) {
          const auto& inv = (*invariants)[i];
          os << "  [wt " << inv.weight << ", N " << inv.nonlinearity << ", profile "
             << inv.profile_digest << "]";
        }
        os << '\n';
      }
      return os.str();
    }
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["n"] = table.n;
      json list = json::array();
      for (std::size_t i = 0; i < table.classes.size(); ++i) {
        const auto& c = table.classes[i];
        json obj;
        obj["index"] = i + 1;
        obj["size"] = c.size();
        obj["representative"] = triple_json(c.representative());
        json members = json::array();
        for (const auto& f : c.members) members.push_back(triple_json(f));
        obj["members"] = std::move(members);
        if (invariants) obj = invariant_fields(std::move(obj), (*invariants)[i], false);
        list.push_back(std::move(obj));
      }
      doc["classes"] = std::move(list);
      return dump(doc);
    }
    case OutputFormat::csv: {
      os << "n,class_index,class_size,j,k,is_representative,weight,nonlinearity\n";
      for (std::size_t i = 0; i < table.classes.size(); ++i) {
        const auto& c = table.classes[i];
        for (const auto& f : c.members) {
          os << table.n << ',' << i + 1 << ',' << c.size() << ',' << f.j() << ',' << f.k() << ','
             << (f == c.representative() ? 1 : 0) << ',';
          if (invariants) os << (*invariants)[i].weight << ',' << (*invariants)[i].nonlinearity;
          else os << ',';
          os << '\n';
        }
      }
      return os.str();
    }
  }
  return {};
}

std::string census(const structure::Census& c, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty: {
      os << "n = " << c.n << ": " << classes_noun(static_cast<std::size_t>(c.class_count)) << ", "
         << functions_noun(static_cast<std::size_t>(c.total_functions)) << "\nsizes {";
      bool first = true;
      for (const auto& [size, count] : c.sizes) {
        os << (first ? "" : ", ") << size << ':' << count;
        first = false;
      }
      os << "}\n";
      return os.str();
    }
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["n"] = c.n;
      doc["classes"] = c.class_count;
      json sizes = json::object();
      for (const auto& [size, count] : c.sizes) sizes[std::to_string(size)] = count;
      doc["sizes"] = std::move(sizes);
      doc["functions"] = c.total_functions;
      return dump(doc);
    }
    case OutputFormat::csv: {
      os << "n,class_size,count\n";
      for (const auto& [size, count] : c.sizes) os << c.n << ',' << size << ',' << count << '\n';
      return os.str();
    }
  }
  return {};
}

namespace {

void pretty_invariant_rows(std::ostream& os, const std::vector<structure::ClassInvariants>& rows,
                           bool verbose) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "Class " << i + 1 << ' ' << r.representative.to_string() << " size " << r.class_size
       << ": wt " << r.weight << ", N " << r.nonlinearity << ", profile " << r.profile_digest
       << '\n';
    if (verbose) os << "  |W| counts {" << structure::profile_to_string(r.profile) << "}\n";
  }
}

json invariant_rows_json(const std::vector<structure::ClassInvariants>& rows, bool verbose) {
  json list = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    json obj;
    obj["index"] = i + 1;
    obj["size"] = rows[i].class_size;
    obj["representative"] = triple_json(rows[i].representative);
    list.push_back(invariant_fields(std::move(obj), rows[i], verbose));
  }
  return list;
}

void csv_invariant_rows(std::ostream& os, int n, const std::vector<structure::ClassInvariants>& rows,
                        bool verbose) {
  os << "n,class_index,class_size,j,k,weight,nonlinearity,profile_digest"
     << (verbose ? ",profile" : "") << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << n << ',' << i + 1 << ',' << r.class_size << ',' << r.representative.j() << ','
       << r.representative.k() << ',' << r.weight << ',' << r.nonlinearity << ','
       << r.profile_digest;
    if (verbose) os << ',' << csv_field(structure::profile_to_string(r.profile));
    os << '\n';
  }
}

}  // namespace

std::string invariants(int n, const std::vector<structure::ClassInvariants>& rows, OutputFormat fmt,
                       bool verbose) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty:
      os << "n = " << n << ": " << classes_noun(rows.size()) << '\n';
      pretty_invariant_rows(os, rows, verbose);
      return os.str();
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["n"] = n;
      doc["classes"] = invariant_rows_json(rows, verbose);
      return dump(doc);
    }
    case OutputFormat::csv:
      csv_invariant_rows(os, n, rows, verbose);
      return os.str();
  }
  return {};
}

std::string conjecture(const structure::ConjectureReport& report, OutputFormat fmt, bool verbose) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty: {
      os << "n = " << report.n << ": " << classes_noun(report.classes.size()) << '\n';
      pretty_invariant_rows(os, report.classes, verbose);
      if (report.collisions.empty()) {
        os << "no (weight, nonlinearity) collisions\n";
      } else {
        for (const auto& c : report.collisions) {
          const auto& a = report.classes[c.first];
          os << "classes " << c.first + 1 << " and " << c.second + 1 << " share (wt, N) = ("
             << a.weight << ", " << a.nonlinearity << "): "
             << (c.separated ? "Walsh profiles differ" : "Walsh profiles IDENTICAL") << '\n';
        }
      }
      os << (report.verdict ? "PASS" : "FAIL") << ": " << report.collisions.size()
         << (report.collisions.size() == 1 ? " collision, " : " collisions, ")
         << (report.verdict ? "all separated by Walsh profile" : "not all separated") << '\n';
      return os.str();
    }
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["n"] = report.n;
      doc["classes"] = invariant_rows_json(report.classes, verbose);
      json collisions = json::array();
      for (const auto& c : report.collisions) {
        json obj;
        obj["classes"] = json::array({c.first + 1, c.second + 1});
        obj["separated"] = c.separated;
        collisions.push_back(std::move(obj));
      }
      doc["collisions"] = std::move(collisions);
      doc["verdict"] = report.verdict ? "pass" : "fail";
      return dump(doc);
    }
    case OutputFormat::csv:
      csv_invariant_rows(os, report.n, report.classes, verbose);
      return os.str();
  }
  return {};
}

std::string report(std::string_view check, const structure::Report& r, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::pretty:
      os << (r.passed ? "PASS: " : "FAIL: ") << r.summary << '\n';
      for (const auto& f : r.failures) os << "  - " << f << '\n';
      return os.str();
    case OutputFormat::json: {
      json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["check"] = check;
      doc["passed"] = r.passed;
      doc["summary"] = r.summary;
      doc["failures"] = r.failures;
      return dump(doc);
    }
    case OutputFormat::csv:
      os << "check,passed,summary,failures\n"
         << csv_field(check) << ',' << (r.passed ? 1 : 0) << ',' << csv_field(r.summary) << ','
         << r.failures.size() << '\n';
      return os.str();
  }
  return {};
}

orbits::ClassTable parse_classes_json(std::string_view text) {
  orbits::ClassTable table;
  try {
    const auto doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw DomainError("unsupported schema_version");
    }
    table.n = doc.at("n").get<int>();
    for (const auto& obj : doc.at("classes")) {
      orbits::EquivalenceClass cls;
      for (const auto& m : obj.at("members")) {
        if (m.size() != 3 || m[0].get<int>() != 1) throw DomainError("member must be [1,j,k]");
        cls.members.push_back(
            mrs::CubicTriple::from_canonical(table.n, m[1].get<int>(), m[2].get<int>()));
      }
      if (cls.members.empty() || cls.members.size() != obj.at("size").get<std::size_t>()) {
        throw DomainError("class size does not match its member list");
      }
      table.classes.push_back(std::move(cls));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed class table JSON: ") + e.what());
  }
  return table;
}

}  // namespace rsbf::render
