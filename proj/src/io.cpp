#include "lcplab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lcplab {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& text, size_t byte,
                          const std::string& what) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw std::runtime_error("parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ": " + what);
}

Rational entry_to_rational(const json& e, const std::string& where) {
  if (e.is_number_integer()) {
    long long v = e.get<long long>();
    Rational r;
    r = static_cast<long>(v);
    return r;
  }
  if (e.is_number_unsigned()) {
    // out of signed range; go through decimal text
    return parse_rational(std::to_string(e.get<unsigned long long>()));
  }
  if (e.is_number_float()) return rational_from_double(e.get<double>());
  if (e.is_string()) {
    try {
      return parse_rational(e.get<std::string>());
    } catch (const std::invalid_argument& ex) {
      throw std::runtime_error(where + ": " + ex.what());
    }
  }
  throw std::runtime_error(where + ": expected a number or rational string");
}

RationalVector array_to_vector(const json& arr, int n,
                               const std::string& where) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != n)
    throw std::runtime_error(where + ": expected an array of length " +
                             std::to_string(n));
  RationalVector v(n);
  for (int i = 0; i < n; ++i)
    v[i] = entry_to_rational(arr[i], where + "[" + std::to_string(i + 1) + "]");
  return v;
}

json rational_to_entry(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return json(static_cast<long long>(r.get_num().get_si()));
  return json(to_string(r));
}

}  // namespace

MatrixDocument parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(text, e.byte, e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw std::runtime_error("missing integer field \"n\"");
  long long n = doc["n"].get<long long>();
  if (n < 1 || n > 64)
    throw std::runtime_error("\"n\" must lie in 1..64");
  if (!doc.contains("A") || !doc["A"].is_array() ||
      static_cast<long long>(doc["A"].size()) != n)
    throw std::runtime_error("\"A\" must be an array of n rows");
  MatrixDocument out;
  std::vector<RationalVector> rows;
  for (int i = 0; i < n; ++i)
    rows.push_back(array_to_vector(doc["A"][i], static_cast<int>(n),
                                   "A row " + std::to_string(i + 1)));
  out.a = RationalMatrix::from_rows(rows);
  if (doc.contains("q") && !doc["q"].is_null())
    out.q = array_to_vector(doc["q"], static_cast<int>(n), "q");
  return out;
}

MatrixDocument read_matrix_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

std::string matrix_document_to_json(const MatrixDocument& doc) {
  json j;
  j["n"] = doc.a.n();
  json rows = json::array();
  for (int i = 0; i < doc.a.n(); ++i) {
    json row = json::array();
    for (int k = 0; k < doc.a.n(); ++k) row.push_back(rational_to_entry(doc.a.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["A"] = std::move(rows);
  if (doc.q) {
    json qa = json::array();
    for (const Rational& v : *doc.q) qa.push_back(rational_to_entry(v));
    j["q"] = std::move(qa);
  }
  return j.dump(2) + "\n";
}

void write_matrix_document(const std::string& path,
                           const MatrixDocument& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << matrix_document_to_json(doc);
}

namespace {

json index_set_json(const IndexSet& s) {
  json arr = json::array();
  for (int i : s.idx) arr.push_back(i + 1);
  return arr;
}

json vector_json(const RationalVector& v) {
  json arr = json::array();
  for (const Rational& x : v) arr.push_back(to_string(x));
  return arr;
}

json verdict_json(const ClassVerdict& v) {
  json j;
  j["member"] = v.member;
  if (v.witness) j["witness"] = vector_json(*v.witness);
  if (v.support) j["support"] = index_set_json(*v.support);
  if (v.index) j["index"] = *v.index + 1;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

json derived_json(const DerivedFlag& f) {
  json j;
  j["holds"] = f.holds;
  j["premises"] = f.premises;
  return j;
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string render_class_report(const ClassReport& r) {
  std::ostringstream os;
  os << "n = " << r.n << "\n";
  os << "principal minor class: " << minor_class_name(r.minor_class.label)
     << "\n";
  os << "game value v(A) = " << to_string(r.game.value) << "\n\n";
  os << pad("class", 16) << pad("member", 8) << "details\n";
  for (const auto& [cls, v] : report_entries(r)) {
    os << pad(class_name(cls), 16) << pad(v->member ? "yes" : "no", 8);
    if (!v->member) {
      os << v->detail;
      if (v->witness) os << "; witness x = " << to_string(*v->witness);
    }
    os << "\n";
  }
  os << "\nderived flags\n";
  auto flag = [&](const std::string& name, const DerivedFlag& f) {
    os << pad(name, 24) << (f.holds ? "yes" : "no");
    for (const std::string& p : f.premises) os << "; " << p;
    os << "\n";
  };
  flag("Q", r.q);
  flag("Q_b", r.q_b);
  flag("Q0 (partial, L-route)", r.q0_via_l);
  return os.str();
}

std::string class_report_to_json(const ClassReport& r) {
  json j;
  j["n"] = r.n;
  json classes;
  for (const auto& [cls, v] : report_entries(r))
    classes[class_name(cls)] = verdict_json(*v);
  j["classes"] = std::move(classes);
  j["minor_class"] = minor_class_name(r.minor_class.label);
  json minors = json::array();
  for (const auto& [alpha, det] : r.minor_class.minors) {
    json m;
    m["alpha"] = index_set_json(alpha);
    m["det"] = to_string(det);
    minors.push_back(std::move(m));
  }
  j["minors"] = std::move(minors);
  json game;
  game["value"] = to_string(r.game.value);
  game["row_strategy"] = vector_json(r.game.row_strategy);
  game["col_strategy"] = vector_json(r.game.col_strategy);
  j["game"] = std::move(game);
  json derived;
  derived["Q"] = derived_json(r.q);
  derived["Q_b"] = derived_json(r.q_b);
  derived["Q0_via_L"] = derived_json(r.q0_via_l);
  j["derived"] = std::move(derived);
  return j.dump(2) + "\n";
}

}  // namespace lcplab
