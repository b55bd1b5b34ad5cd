#include "antipodal/family_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace antipodal {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Params infer_params(const SignedVector &v) {
  return Params::make(v.dimension(), v.plus().size(), v.minus().size());
}

void add_member(VectorFamily &f, const SignedVector &v, int line) {
  if (!v.conforms_to(f.params()))
    fail(ErrorCode::ShapeMismatch, "line " + std::to_string(line) + ": vector " +
                                       format_vector(v) + " is not in V" +
                                       f.params().to_string());
  if (!f.insert(v))
    fail(ErrorCode::Parse, "line " + std::to_string(line) + ": duplicate vector " +
                               format_vector(v));
}

} // namespace

VectorFamily parse_family_text(std::string_view text) {
  std::optional<Params> params;
  std::vector<std::pair<SignedVector, int>> pending;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    if (line.front() == 'V') {
      if (params || !pending.empty())
        fail(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                   ": header must precede all vectors");
      std::istringstream hs{std::string(line.substr(1))};
      int n = 0, k = 0, l = 0;
      std::string extra;
      if (!(hs >> n >> k >> l) || (hs >> extra))
        fail(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                   ": header must read 'V n k l'");
      params = Params::make(n, k, l);
      continue;
    }
    pending.emplace_back(parse_vector(line), line_no);
  }
  if (!params) {
    if (pending.empty())
      fail(ErrorCode::EmptyInput, "family has neither a header nor any vector");
    params = infer_params(pending.front().first);
  }
  VectorFamily f(*params);
  for (const auto &[v, line] : pending)
    add_member(f, v, line);
  return f;
}

std::string format_family_text(const VectorFamily &f) {
  std::string out = "V " + std::to_string(f.params().n) + " " +
                    std::to_string(f.params().k) + " " +
                    std::to_string(f.params().l) + "\n";
  for (const SignedVector &v : f)
    out += format_vector(v) + "\n";
  return out;
}

VectorFamily parse_family_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  try {
    VectorFamily f(Params::make(doc.at("n").get<int>(), doc.at("k").get<int>(),
                                doc.at("l").get<int>()));
    int i = 0;
    for (const auto &entry : doc.at("vectors"))
      add_member(f, parse_vector(entry.get<std::string>()), ++i);
    return f;
  } catch (const nlohmann::json::exception &e) {
    fail(ErrorCode::Parse, std::string("malformed family JSON: ") + e.what());
  }
}

std::string format_family_json(const VectorFamily &f) {
  nlohmann::json doc;
  doc["n"] = f.params().n;
  doc["k"] = f.params().k;
  doc["l"] = f.params().l;
  doc["vectors"] = nlohmann::json::array();
  for (const SignedVector &v : f)
    doc["vectors"].push_back(format_vector(v));
  return doc.dump() + "\n";
}

VectorFamily parse_family(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{')
    return parse_family_json(t);
  return parse_family_text(text);
}

VectorFamily load_family(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family(ss.str());
}

void save_family(const VectorFamily &f, const std::string &path, bool json) {
  std::ofstream out(path);
  if (!out)
    fail(ErrorCode::Io, "cannot write " + path);
  out << (json ? format_family_json(f) : format_family_text(f));
  if (!out)
    fail(ErrorCode::Io, "write to " + path + " failed");
}

} // namespace antipodal
