#include "lsharp/gamma/descriptor.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lsharp/error.hpp"

namespace lsharp {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what, const std::string& key) const {
    const std::size_t at = key.empty() ? std::string::npos : text_.find("\"" + key + "\"");
    auto [line, col] = position_of(text_, at == std::string::npos ? 0 : at);
    throw ParseError(what, line, col);
  }

  const json& field(const json& obj, const std::string& key) const {
    if (!obj.is_object()) fail("expected an object around \"" + key + "\"", key);
    auto it = obj.find(key);
    if (it == obj.end()) fail("missing field \"" + key + "\"", "");
    return *it;
  }

  std::string string_field(const json& obj, const std::string& key) const {
    const json& v = field(obj, key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long>());
    fail("field \"" + key + "\" must be a string", key);
  }

  mpq_class rational_field(const json& obj, const std::string& key) const {
    const std::string s = string_field(obj, key);
    auto q = parse_rational(s);
    if (!q) fail("field \"" + key + "\" must be an exact rational \"p/q\", got \"" + s + "\"", key);
    return *q;
  }

  // exact rational or decimal
  std::variant<mpq_class, BigFloat> number_field(const json& obj, const std::string& key) const {
    const std::string s = string_field(obj, key);
    if (auto q = parse_rational(s)) return *q;
    try {
      return BigFloat(std::string_view(s));
    } catch (const std::exception&) {
      fail("field \"" + key + "\" is not a number: \"" + s + "\"", key);
    }
  }

  Scalar complex_field(const json& obj, const std::string& key) const {
    const json& v = field(obj, key);
    if (!v.is_object()) fail("field \"" + key + "\" must be {\"re\":..,\"im\":..}", key);
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.key() != "re" && it.key() != "im") fail("unknown field \"" + it.key() + "\"", it.key());
    }
    auto re = number_field(v, "re");
    auto im = v.contains("im") ? number_field(v, "im") : std::variant<mpq_class, BigFloat>(mpq_class(0));
    if (std::holds_alternative<mpq_class>(re) && std::holds_alternative<mpq_class>(im)) {
      return Scalar(GaussRational(std::get<mpq_class>(re), std::get<mpq_class>(im)));
    }
    auto to_big = [](const std::variant<mpq_class, BigFloat>& x) {
      return std::holds_alternative<mpq_class>(x) ? BigFloat(std::get<mpq_class>(x)) : std::get<BigFloat>(x);
    };
    return Scalar(BigComplex(to_big(re), to_big(im)));
  }

 private:
  const std::string& text_;
};

std::string number_text(const BigFloat& x) {
  return x.to_string(static_cast<int>(static_cast<double>(x.precision()) * 0.30103) + 3);
}

json complex_json(const Scalar& z) {
  if (z.is_exact()) {
    const GaussRational g = z.exact().gaussian();
    return json{{"re", g.re.get_str()}, {"im", g.im.get_str()}};
  }
  const BigComplex c = z.to_complex();
  return json{{"re", number_text(c.re)}, {"im", number_text(c.im)}};
}

}  // namespace

GammaFactor parse_descriptor(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed JSON: ") + e.what(), line, col);
  }
  Reader rd(text);
  if (!doc.is_object()) rd.fail("descriptor must be a JSON object", "");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    static const char* known[] = {"Q", "factors", "omega", "name", "description"};
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known)) {
      rd.fail("unknown field \"" + it.key() + "\"", it.key());
    }
  }

  GammaFactor g;
  const json& q = rd.field(doc, "Q");
  if (!q.is_object()) rd.fail("\"Q\" must be an object", "Q");
  if (q.contains("numeric")) {
    auto v = rd.number_field(q, "numeric");
    g.Q = QFactor::from_numeric(std::holds_alternative<mpq_class>(v) ? BigFloat(std::get<mpq_class>(v))
                                                                       : std::get<BigFloat>(v));
  } else {
    const mpq_class u = rd.rational_field(q, "u");
    if (u <= 0) rd.fail("\"u\" must be positive", "u");
    const json& v = rd.field(q, "v");
    if (!v.is_number_integer()) rd.fail("\"v\" must be an integer", "v");
    g.Q = QFactor::from_uv(u, v.get<long>());
  }

  const json& factors = rd.field(doc, "factors");
  if (!factors.is_array()) rd.fail("\"factors\" must be an array", "factors");
  for (const auto& f : factors) {
    GammaTerm t{rd.rational_field(f, "lambda"), rd.complex_field(f, "mu")};
    g.terms.push_back(std::move(t));
  }
  if (doc.contains("omega") && !doc["omega"].is_null()) g.omega = rd.complex_field(doc, "omega");

  try {
    g.validate();
  } catch (const InvalidGammaFactor& e) {
    rd.fail(e.what(), "factors");
  }
  return g;
}

GammaFactor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open descriptor " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_descriptor(ss.str());
}

std::string serialize_descriptor(const GammaFactor& g, const std::string& name) {
  json doc = json::object();
  if (!name.empty()) doc["name"] = name;
  if (auto uv = g.Q.as_uv()) {
    doc["Q"] = json{{"u", uv->first.get_str()}, {"v", uv->second}};
  } else {
    doc["Q"] = json{{"numeric", number_text(g.Q.value())}};
  }
  json factors = json::array();
  for (const auto& t : g.terms) {
    factors.push_back(json{{"lambda", t.lambda.get_str()}, {"mu", complex_json(t.mu)}});
  }
  doc["factors"] = factors;
  if (g.omega) doc["omega"] = complex_json(*g.omega);
  return doc.dump(2) + "\n";
}

}  // namespace lsharp
