#include "supchar/chartab.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace supchar {

namespace {

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

int power_mod(long base, long exp, long mod) {
  long result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

int multiplicative_order(int g, int p) {
  int k = 1;
  long x = g % p;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

Cyclotomic integer(const FieldPtr& f, long v) { return Cyclotomic(f, v); }

// zeta_m^k expressed in Q(zeta_N) for m | N.
Cyclotomic sub_root(const FieldPtr& f, int m, long k) {
  return Cyclotomic::root(f, static_cast<long>(f->order() / m) * k);
}

}  // namespace

CharacterTable cyclic_table(int m) {
  if (m < 1 || m > kMaxClasses) throw SizeError("cyclic group order must be in [1, 64], got " + std::to_string(m));
  CharacterTable t;
  t.name = "Z" + std::to_string(m);
  t.order = static_cast<std::uint64_t>(m);
  t.field = CyclotomicField::make(m);
  t.class_sizes.assign(static_cast<std::size_t>(m), 1);
  t.values.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) t.values[static_cast<std::size_t>(i)].push_back(Cyclotomic::root(t.field, static_cast<long>(i) * j));
  }
  return t;
}

CharacterTable dihedral_table(int m) {
  if (m < 2 || m > 60) throw SizeError("dihedral half-order m must be in [2, 60], got " + std::to_string(m));
  CharacterTable t;
  t.name = "D" + std::to_string(2 * m);
  t.order = static_cast<std::uint64_t>(2 * m);
  t.field = CyclotomicField::make(std::lcm(m, 2));
  const auto& f = t.field;

  auto rotation_value = [&](int k, int j) { return sub_root(f, m, static_cast<long>(k) * j) + sub_root(f, m, -static_cast<long>(k) * j); };

  if (m % 2 == 1) {
    const int half = (m - 1) / 2;
    t.class_sizes.push_back(1);
    for (int j = 1; j <= half; ++j) t.class_sizes.push_back(2);
    t.class_sizes.push_back(static_cast<std::uint64_t>(m));

    std::vector<Cyclotomic> trivial(static_cast<std::size_t>(half + 2), integer(f, 1));
    std::vector<Cyclotomic> sign = trivial;
    sign.back() = integer(f, -1);
    t.values.push_back(std::move(trivial));
    t.values.push_back(std::move(sign));
    for (int k = 1; k <= half; ++k) {
      std::vector<Cyclotomic> row{integer(f, 2)};
      for (int j = 1; j <= half; ++j) row.push_back(rotation_value(k, j));
      row.push_back(integer(f, 0));
      t.values.push_back(std::move(row));
    }
    return t;
  }

  // Even m: rotations r^1..r^{m/2}, then reflection classes s<r^2> and sr<r^2>.
  const int half = m / 2;
  t.class_sizes.push_back(1);
  for (int j = 1; j < half; ++j) t.class_sizes.push_back(2);
  t.class_sizes.push_back(1);
  t.class_sizes.push_back(static_cast<std::uint64_t>(half));
  t.class_sizes.push_back(static_cast<std::uint64_t>(half));

  auto linear = [&](int rotation_sign, int s_value, int sr_value) {
    std::vector<Cyclotomic> row{integer(f, 1)};
    for (int j = 1; j <= half; ++j) row.push_back(integer(f, (rotation_sign < 0 && j % 2 == 1) ? -1 : 1));
    row.push_back(integer(f, s_value));
    row.push_back(integer(f, sr_value));
    return row;
  };
  t.values.push_back(linear(1, 1, 1));
  t.values.push_back(linear(1, -1, -1));
  t.values.push_back(linear(-1, 1, -1));
  t.values.push_back(linear(-1, -1, 1));
  for (int k = 1; k < half; ++k) {
    std::vector<Cyclotomic> row{integer(f, 2)};
    for (int j = 1; j <= half; ++j) row.push_back(rotation_value(k, j));
    row.push_back(integer(f, 0));
    row.push_back(integer(f, 0));
    t.values.push_back(std::move(row));
  }
  return t;
}

CharacterTable frobenius_pq_table(int p, int q) {
  if (!is_prime(p) || !is_prime(q)) throw ArgumentError("frobenius: p and q must be prime");
  if ((p - 1) % q != 0) throw ArgumentError("frobenius: q must divide p-1");
  const int orbits = (p - 1) / q;
  const int n = 1 + orbits + (q - 1);
  if (n > kMaxClasses) throw SizeError("frobenius group has " + std::to_string(n) + " classes, limit is 64");

  // h generates the order-q subgroup of Z_p^*.
  int h = 0;
  for (int g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) {
      h = power_mod(g, orbits, p);
      break;
    }
  }
  if (p == 2 || h == 0) throw ArgumentError("frobenius: no element of order q mod p");

  // Cosets of <h> in Z_p^*, ordered by least element.
  std::vector<std::vector<int>> cosets;
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (int x = 1; x < p; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> coset;
    long y = x;
    for (int i = 0; i < q; ++i) {
      coset.push_back(static_cast<int>(y));
      seen[static_cast<std::size_t>(y)] = true;
      y = y * h % p;
    }
    cosets.push_back(std::move(coset));
  }

  CharacterTable t;
  t.name = "T" + std::to_string(p) + "_" + std::to_string(q);
  t.order = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(q);
  t.field = CyclotomicField::make(p * q);
  const auto& f = t.field;

  t.class_sizes.push_back(1);
  for (int c = 0; c < orbits; ++c) t.class_sizes.push_back(static_cast<std::uint64_t>(q));
  for (int s = 1; s < q; ++s) t.class_sizes.push_back(static_cast<std::uint64_t>(p));

  for (int s = 0; s < q; ++s) {
    std::vector<Cyclotomic> row(static_cast<std::size_t>(1 + orbits), integer(f, 1));
    for (int b = 1; b < q; ++b) row.push_back(sub_root(f, q, static_cast<long>(s) * b));
    t.values.push_back(std::move(row));
  }
  for (const auto& coset : cosets) {
    std::vector<Cyclotomic> row{integer(f, q)};
    for (const auto& cls : cosets) {
      const long x = cls.front();
      Cyclotomic v = integer(f, 0);
      for (int y : coset) v += sub_root(f, p, static_cast<long>(y) * x);
      row.push_back(std::move(v));
    }
    for (int b = 1; b < q; ++b) row.push_back(integer(f, 0));
    t.values.push_back(std::move(row));
  }
  return t;
}

std::vector<TableViolation> validate_table(const CharacterTable& t) {
  std::vector<TableViolation> out;
  const int n = t.num_classes();
  if (n < 1) {
    out.push_back({"num_classes", "table has no classes"});
    return out;
  }
  if (n > kMaxClasses) out.push_back({"num_classes", std::to_string(n) + " classes exceeds the limit of 64"});

  std::uint64_t sum = 0;
  for (int j = 0; j < n; ++j) {
    const auto size = t.class_sizes[static_cast<std::size_t>(j)];
    if (size == 0) out.push_back({"class sizes", "class " + std::to_string(j + 1) + " has size 0"});
    sum += size;
  }
  if (t.class_sizes.front() != 1) out.push_back({"identity class", "class 1 must have size 1, got " + std::to_string(t.class_sizes.front())});
  if (sum != t.order) {
    out.push_back({"class sizes sum", "class sizes sum to " + std::to_string(sum) + ", group order is " + std::to_string(t.order)});
  }

  bool shape_ok = t.values.size() == static_cast<std::size_t>(n);
  for (const auto& row : t.values) shape_ok = shape_ok && row.size() == static_cast<std::size_t>(n);
  if (!shape_ok) {
    out.push_back({"shape", "character values must form a " + std::to_string(n) + "x" + std::to_string(n) + " matrix"});
    return out;
  }

  for (int j = 0; j < n; ++j) {
    if (!t.value(0, j).equals(Cyclotomic(t.field, 1L))) {
      out.push_back({"trivial character", "row 1 has value " + t.value(0, j).to_string() + " on class " + std::to_string(j + 1)});
    }
  }

  Rational degree_squares = 0;
  bool degrees_ok = true;
  for (int i = 0; i < n; ++i) {
    const auto& d = t.value(i, 0);
    if (!d.is_rational() || d.as_rational() <= 0 || d.as_rational().get_den() != 1) {
      out.push_back({"degree", "row " + std::to_string(i + 1) + " has non-positive-integer degree " + d.to_string()});
      degrees_ok = false;
      continue;
    }
    degree_squares += d.as_rational() * d.as_rational();
  }
  if (degrees_ok && degree_squares != Rational(BigInt(std::to_string(t.order)))) {
    out.push_back({"degree squares", "sum of squared degrees is " + degree_squares.get_str() + ", group order is " + std::to_string(t.order)});
  }

  // First orthogonality relation.
  std::vector<std::vector<Cyclotomic>> conj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) conj[static_cast<std::size_t>(i)].push_back(t.value(i, j).conjugate().scale(Rational(BigInt(std::to_string(t.class_sizes[static_cast<std::size_t>(j)])))));
  }
  const Cyclotomic expected_norm(t.field, Rational(BigInt(std::to_string(t.order))));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Cyclotomic inner(t.field, 0L);
      for (int j = 0; j < n; ++j) inner += t.value(a, j) * conj[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
      const bool ok = a == b ? inner.equals(expected_norm) : inner.is_zero();
      if (!ok) {
        out.push_back({"orthogonality", "rows " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " have inner product " + inner.to_string() +
                                            " (expected " + (a == b ? std::to_string(t.order) : std::string("0")) + ")"});
      }
    }
  }
  return out;
}

namespace {

constexpr int kMaxRootOrder = 2048;

std::uint64_t positive_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw ParseError(what + " must be a non-negative integer, got " + v.dump());
  }
  return v.get<std::uint64_t>();
}

}  // namespace

CharacterTable parse_table(const nlohmann::json& doc) {
  static const std::set<std::string> known{"name", "order", "num_classes", "root_order", "class_sizes", "characters"};
  if (!doc.is_object()) throw ParseError("character table document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (!known.contains(key)) throw ParseError("unknown field '" + key + "'");
  }
  for (const auto& key : known) {
    if (!doc.contains(key)) throw ParseError("missing field '" + key + "'");
  }

  const auto n = positive_int(doc["num_classes"], "num_classes");
  if (n > static_cast<std::uint64_t>(kMaxClasses)) throw SizeError("table has " + std::to_string(n) + " classes, limit is 64");
  if (n == 0) throw ParseError("num_classes must be positive");
  if (!doc["name"].is_string()) throw ParseError("name must be a string");

  const auto root_order = positive_int(doc["root_order"], "root_order");
  if (root_order == 0) throw ParseError("root_order must be positive");
  if (root_order > static_cast<std::uint64_t>(kMaxRootOrder)) throw SizeError("root_order above " + std::to_string(kMaxRootOrder) + " is not supported");

  const auto& sizes = doc["class_sizes"];
  const auto& chars = doc["characters"];
  if (!sizes.is_array() || sizes.size() != n) throw ParseError("class_sizes must be an array of num_classes integers");
  if (!chars.is_array() || chars.size() != n) throw ParseError("characters must be an array of num_classes rows");

  CharacterTable t;
  t.name = doc["name"].get<std::string>();
  t.order = positive_int(doc["order"], "order");
  t.field = CyclotomicField::make(static_cast<int>(root_order));
  for (const auto& s : sizes) t.class_sizes.push_back(positive_int(s, "class size"));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = chars[i];
    if (!row.is_array() || row.size() != n) throw ParseError("character row " + std::to_string(i + 1) + " must have num_classes values");
    std::vector<Cyclotomic> values;
    values.reserve(n);
    for (const auto& v : row) values.push_back(cyclotomic_from_json(t.field, v));
    t.values.push_back(std::move(values));
  }
  return t;
}

CharacterTable parse_table(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_table(doc);
}

CharacterTable load_table(const nlohmann::json& doc) {
  CharacterTable t = parse_table(doc);
  auto violations = validate_table(t);
  if (!violations.empty()) throw InvalidTable(std::move(violations));
  return t;
}

CharacterTable load_table(std::string_view text) {
  CharacterTable t = parse_table(text);
  auto violations = validate_table(t);
  if (!violations.empty()) throw InvalidTable(std::move(violations));
  return t;
}

CharacterTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading table file '" + path + "'");
  return load_table(buf.str());
}

nlohmann::ordered_json table_to_json(const CharacterTable& t) {
  nlohmann::ordered_json doc;
  doc["name"] = t.name;
  doc["order"] = t.order;
  doc["num_classes"] = t.num_classes();
  doc["root_order"] = t.root_order();
  doc["class_sizes"] = t.class_sizes;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.values) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& v : row) out.push_back(to_json(v));
    rows.push_back(std::move(out));
  }
  doc["characters"] = std::move(rows);
  return doc;
}

std::string serialize_table(const CharacterTable& t) { return table_to_json(t).dump() + "\n"; }

}  // namespace supchar
