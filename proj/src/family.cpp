#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "igx/error.hpp"
#include "igx/group.hpp"

namespace igx {

namespace {

using Table = std::vector<Elem>;

Table table_from_op(int n, const std::function<int(int, int)>& op) {
  Table t(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = Elem(op(a, b));
  return t;
}

void check_budget(long long order, int budget, const std::string& what) {
  if (order > budget)
    throw Error(ErrorCode::OrderBudgetExceeded,
                what + " has order " + std::to_string(order) + " > budget " + std::to_string(budget));
}

Group build_cyclic(const CyclicSpec& s, const std::string& text, int budget) {
  if (s.n < 1) throw Error(ErrorCode::InvalidParameters, "cyclic order must be positive");
  check_budget(s.n, budget, text);
  int n = s.n;
  return Group("Z" + std::to_string(n), text, n, table_from_op(n, [n](int a, int b) { return (a + b) % n; }));
}

Group build_abelian(const AbelianSpec& s, const std::string& text, int budget) {
  if (s.orders.empty()) throw Error(ErrorCode::InvalidParameters, "abelian product needs at least one factor");
  long long n = 1;
  for (int f : s.orders) {
    if (f < 1) throw Error(ErrorCode::InvalidParameters, "abelian factor must be positive");
    n *= f;
    check_budget(n, budget, text);
  }
  // Mixed-radix digits, leftmost factor most significant.
  auto op = [&s, n](int a, int b) {
    long long out = 0;
    long long ra = a, rb = b, scale = n;
    for (int f : s.orders) {
      scale /= f;
      int da = int(ra / scale), db = int(rb / scale);
      ra %= scale;
      rb %= scale;
      out = out * f + (da + db) % f;
    }
    return int(out);
  };
  std::string name;
  for (std::size_t i = 0; i < s.orders.size(); ++i) name += (i ? " x Z" : "Z") + std::to_string(s.orders[i]);
  return Group(name, text, int(n), table_from_op(int(n), op));
}

Group build_dihedral(const DihedralSpec& s, const std::string& text, int budget) {
  if (s.order < 2 || s.order % 2 != 0) throw Error(ErrorCode::InvalidParameters, "dihedral order must be even >= 2");
  check_budget(s.order, budget, text);
  const int n = s.order / 2;
  // Elements a^i b^e encoded as 2i + e, with b a = a^{-1} b.
  auto op = [n](int x, int y) {
    int i = x >> 1, e = x & 1, j = y >> 1, f = y & 1;
    int k = (i + (e ? n - j : j)) % n;
    return 2 * k + (e ^ f);
  };
  return Group("D" + std::to_string(s.order), text, s.order, table_from_op(s.order, op));
}

Group build_quaternion(const QuaternionSpec& s, const std::string& text, int budget) {
  int n = s.order;
  if (n < 8 || (n & (n - 1)) != 0)
    throw Error(ErrorCode::InvalidParameters, "generalized quaternion order must be 2^m, m >= 3");
  check_budget(n, budget, text);
  const int half = n / 2;  // order of a
  // a^i b^e with b^2 = a^{half/2}, b a = a^{-1} b.
  auto op = [half](int x, int y) {
    int i = x >> 1, e = x & 1, j = y >> 1, f = y & 1;
    int k = (i + (e ? half - j : j) + ((e & f) ? half / 2 : 0)) % half;
    return 2 * k + (e ^ f);
  };
  return Group("Q" + std::to_string(n), text, n, table_from_op(n, op));
}

Group build_modular(const ModularSpec& s, const std::string& text, int budget) {
  if (!is_prime(s.p) || s.alpha < 3) throw Error(ErrorCode::InvalidParameters, "modular group needs prime p, alpha >= 3");
  long long order = 1;
  for (int i = 0; i < s.alpha; ++i) {
    order *= s.p;
    check_budget(order, budget, text);
  }
  const int big = int(order) / s.p;        // order of a = p^(alpha-1)
  const int r = big / s.p + 1;             // b a b^-1 = a^r, r = p^(alpha-2)+1
  const int p = s.p;
  std::vector<int> rpow(p);                // r^j mod big
  rpow[0] = 1;
  for (int j = 1; j < p; ++j) rpow[j] = int((long long)rpow[j - 1] * r % big);
  // a^i b^j encoded as i*p + j; (a^i b^j)(a^k b^l) = a^{i + k r^j} b^{j+l}.
  auto op = [big, p, &rpow](int x, int y) {
    int i = x / p, j = x % p, k = y / p, l = y % p;
    int i2 = int((i + (long long)k * rpow[j]) % big);
    return i2 * p + (j + l) % p;
  };
  return Group("M" + std::to_string(order), text, int(order), table_from_op(int(order), op));
}

Group build_semidirect(const SemidirectCyclicSpec& s, const std::string& text, int budget) {
  if (s.q < 2 || !is_prime(s.p) || s.alpha < 1 || s.t < 0 || s.t > s.alpha)
    throw Error(ErrorCode::InvalidParameters, "semidirect parameters out of range");
  if (s.q % s.p == 0) throw Error(ErrorCode::InvalidParameters, "semidirect requires gcd(q, p) = 1");
  long long pa = 1;
  for (int i = 0; i < s.alpha; ++i) pa *= s.p;
  long long order = pa * s.q;
  check_budget(order, budget, text);
  long long pt = 1;
  for (int i = 0; i < s.t; ++i) pt *= s.p;
  // Smallest i in 1..q-1 whose multiplicative order mod q is exactly p^t.
  int act = 0;
  for (int i = 1; i < s.q; ++i)
    if (multiplicative_order(i, s.q) == pt) {
      act = i;
      break;
    }
  if (act == 0)
    throw Error(ErrorCode::InvalidParameters,
                "no unit of order " + std::to_string(pt) + " modulo " + std::to_string(s.q));
  const int q = s.q, N = int(pa);
  std::vector<int> apow(N);  // act^y mod q
  apow[0] = 1;
  for (int y = 1; y < N; ++y) apow[y] = int((long long)apow[y - 1] * act % q);
  // a^x b^y encoded as x*N + y; b a b^-1 = a^act.
  auto op = [q, N, &apow](int u, int v) {
    int x1 = u / N, y1 = u % N, x2 = v / N, y2 = v % N;
    int x = int((x1 + (long long)x2 * apow[y1]) % q);
    return x * N + (y1 + y2) % N;
  };
  std::string name = "Z" + std::to_string(q) + (s.t == 0 ? " x Z" : ":Z") + std::to_string(N);
  return Group(name, text, int(order), table_from_op(int(order), op));
}

struct Mat2 {
  int a, b, c, d;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y, int p) {
  return {int(((long long)x.a * y.a + (long long)x.b * y.c) % p), int(((long long)x.a * y.b + (long long)x.b * y.d) % p),
          int(((long long)x.c * y.a + (long long)x.d * y.c) % p), int(((long long)x.c * y.b + (long long)x.d * y.d) % p)};
}

bool mat_is_identity(const Mat2& m) { return m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1; }

int mat_order(Mat2 m, int p, int cap) {
  Mat2 acc = m;
  for (int k = 1; k <= cap; ++k) {
    if (mat_is_identity(acc)) return k;
    acc = mat_mul(acc, m, p);
  }
  return 0;
}

Group build_matrix_action(const MatrixActionSpec& s, const std::string& text, int budget) {
  if (!is_prime(s.p) || s.m < 1) throw Error(ErrorCode::InvalidParameters, "matrix action needs prime p, m >= 1");
  long long order = (long long)s.p * s.p * s.m;
  check_budget(order, budget, text);
  const int p = s.p, m = s.m;
  Mat2 M{0, 0, 0, 0};
  if (s.matrix) {
    auto& a = *s.matrix;
    M = {((a[0] % p) + p) % p, ((a[1] % p) + p) % p, ((a[2] % p) + p) % p, ((a[3] % p) + p) % p};
    if (mat_order(M, p, m) != m)
      throw Error(ErrorCode::InvalidParameters, "matrix does not have order " + std::to_string(m) + " in GL2(p)");
  } else {
    // Companion shape [[0,-1],[1,l]], smallest l with order exactly m.
    bool found = false;
    for (int l = 0; l < p && !found; ++l) {
      Mat2 cand{0, p - 1, 1, l};
      if (mat_order(cand, p, m) == m) {
        M = cand;
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorCode::InvalidParameters,
                  "no companion matrix of order " + std::to_string(m) + " in GL2(" + std::to_string(p) + ")");
  }
  std::vector<Mat2> Mpow(m, {1, 0, 0, 1});
  for (int z = 1; z < m; ++z) Mpow[z] = mat_mul(Mpow[z - 1], M, p);
  // a^x b^y c^z encoded as (x*p + y)*m + z; c (a^x b^y) c^-1 = row (x,y) times M.
  auto op = [p, m, &Mpow](int u, int v) {
    int z1 = u % m, xy1 = u / m, z2 = v % m, xy2 = v / m;
    int x1 = xy1 / p, y1 = xy1 % p, x2 = xy2 / p, y2 = xy2 % p;
    const Mat2& A = Mpow[z1];
    int x = int((x1 + (long long)x2 * A.a + (long long)y2 * A.c) % p);
    int y = int((y1 + (long long)x2 * A.b + (long long)y2 * A.d) % p);
    return (x * p + y) * m + (z1 + z2) % m;
  };
  std::string name = "(Z" + std::to_string(p) + " x Z" + std::to_string(p) + "):Z" + std::to_string(m);
  return Group(name, text, int(order), table_from_op(int(order), op));
}

Group build_g3(const G3Spec& s, const std::string& text, int budget) {
  if (!is_prime(s.p) || !is_prime(s.q) || !is_prime(s.r) || s.q == s.r)
    throw Error(ErrorCode::InvalidParameters, "g3 needs distinct primes q, r and prime p");
  if ((s.p - 1) % s.q != 0 || (s.p - 1) % s.r != 0)
    throw Error(ErrorCode::InvalidParameters, "g3 requires q | p-1 and r | p-1");
  long long order = (long long)s.p * s.q * s.r;
  check_budget(order, budget, text);
  auto pick = [&s](std::optional<int> given, int target_order) {
    if (given) {
      if (*given <= 1 || multiplicative_order(*given % s.p, s.p) != target_order)
        throw Error(ErrorCode::InvalidParameters, "g3 exponent has wrong multiplicative order");
      return *given % s.p;
    }
    for (int x = 2; x < s.p; ++x)
      if (multiplicative_order(x, s.p) == target_order) return x;
    throw Error(ErrorCode::InvalidParameters, "no unit of required order mod p");
  };
  const int p = s.p, q = s.q, r = s.r;
  const int mu = pick(s.mu, q), v = pick(s.v, r);
  std::vector<int> mupow(q), vpow(r);
  mupow[0] = vpow[0] = 1;
  for (int y = 1; y < q; ++y) mupow[y] = int((long long)mupow[y - 1] * mu % p);
  for (int z = 1; z < r; ++z) vpow[z] = int((long long)vpow[z - 1] * v % p);
  // a^x b^y c^z encoded as (x*q + y)*r + z.
  auto op = [p, q, r, &mupow, &vpow](int u, int w) {
    int z1 = u % r, xy1 = u / r, z2 = w % r, xy2 = w / r;
    int x1 = xy1 / q, y1 = xy1 % q, x2 = xy2 / q, y2 = xy2 % q;
    int x = int((x1 + (long long)x2 * mupow[y1] % p * vpow[z1]) % p);
    return (x * q + (y1 + y2) % q) * r + (z1 + z2) % r;
  };
  std::string name = "G3(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  return Group(name, text, int(order), table_from_op(int(order), op));
}

using Perm = std::vector<std::uint8_t>;

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm f(degree);
  std::iota(f.begin(), f.end(), 0);
  for (const auto& cyc : cycles) {
    std::vector<char> used(degree, 0);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw Error(ErrorCode::InvalidParameters, "cycle point out of range");
      if (used[from]) throw Error(ErrorCode::InvalidParameters, "repeated point in cycle");
      used[from] = 1;
      f[from] = std::uint8_t(to);
    }
  }
  return f;
}

Group build_permutation(const PermutationSpec& s, const std::string& text, int budget, const std::string& name_hint) {
  if (s.degree < 1 || s.degree > 64) throw Error(ErrorCode::InvalidParameters, "permutation degree out of range");
  std::vector<Perm> gens;
  for (const auto& g : s.generators) gens.push_back(perm_from_cycles(s.degree, g));
  Perm id(s.degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const Perm& g : gens) {
      Perm prod(s.degree);
      for (int x = 0; x < s.degree; ++x) prod[x] = g[elems[qi][x]];
      if (index.emplace(prod, int(elems.size())).second) {
        elems.push_back(prod);
        check_budget((long long)elems.size(), budget, text);
      }
    }
  }
  const int n = int(elems.size());
  auto op = [&](int a, int b) {
    Perm prod(s.degree);
    for (int x = 0; x < s.degree; ++x) prod[x] = elems[b][elems[a][x]];
    return index.at(prod);
  };
  std::string name = name_hint.empty() ? "perm(deg=" + std::to_string(s.degree) + ",order=" + std::to_string(n) + ")"
                                       : name_hint;
  return Group(name, text, n, table_from_op(n, op));
}

std::string perm_name_hint(const PermutationSpec& s, int) {
  // Recognize the stock alternating/symmetric generator patterns.
  if (s.generators.size() == 2) {
    const auto& g0 = s.generators[0];
    const auto& g1 = s.generators[1];
    if (s.degree == 4 && g0.size() == 1 && g0[0].size() == 3 && g1.size() == 2) return "A4";
    if (g0.size() == 1 && (int)g0[0].size() == s.degree && g1.size() == 1 && g1[0].size() == 2)
      return "S" + std::to_string(s.degree);
    if (g0.size() == 1 && (int)g0[0].size() == s.degree && s.degree % 2 == 1 && g1.size() == 1 && g1[0].size() == 3)
      return "A" + std::to_string(s.degree);
  }
  return "";
}

}  // namespace

FamilySpec FamilySpec::alternating(int degree) {
  if (degree == 4) return {PermutationSpec{4, {{{1, 2, 3}}, {{1, 2}, {3, 4}}}}};
  if (degree == 5) return {PermutationSpec{5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}}}};
  throw Error(ErrorCode::InvalidParameters, "alternating helper supports degrees 4 and 5");
}

FamilySpec FamilySpec::symmetric(int degree) {
  if (degree < 3) throw Error(ErrorCode::InvalidParameters, "symmetric helper needs degree >= 3");
  std::vector<int> big(degree);
  std::iota(big.begin(), big.end(), 1);
  return {PermutationSpec{degree, {{big}, {{1, 2}}}}};
}

// --- canonical text -------------------------------------------------------

namespace {

std::string cycles_text(const std::vector<std::vector<int>>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

std::vector<std::vector<int>> normalize_cycles(std::vector<std::vector<int>> cycles) {
  std::vector<std::vector<int>> out;
  for (auto& c : cycles) {
    if (c.size() < 2) continue;
    auto smallest = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), smallest, c.end());
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string FamilySpec::text() const {
  struct Visitor {
    std::string operator()(const CyclicSpec& s) const { return "cyclic:" + std::to_string(s.n); }
    std::string operator()(const AbelianSpec& s) const {
      std::string out = "abelian:";
      for (std::size_t i = 0; i < s.orders.size(); ++i) out += (i ? "x" : "") + std::to_string(s.orders[i]);
      return out;
    }
    std::string operator()(const DihedralSpec& s) const { return "dihedral:" + std::to_string(s.order); }
    std::string operator()(const QuaternionSpec& s) const { return "genq:" + std::to_string(s.order); }
    std::string operator()(const ModularSpec& s) const {
      return "modular:" + std::to_string(s.p) + "," + std::to_string(s.alpha);
    }
    std::string operator()(const SemidirectCyclicSpec& s) const {
      return "sd:q=" + std::to_string(s.q) + ",p=" + std::to_string(s.p) + ",a=" + std::to_string(s.alpha) +
             ",t=" + std::to_string(s.t);
    }
    std::string operator()(const MatrixActionSpec& s) const {
      std::string out = "mat:p=" + std::to_string(s.p) + ",m=" + std::to_string(s.m);
      if (s.matrix)
        out += ",M=" + std::to_string((*s.matrix)[0]) + "," + std::to_string((*s.matrix)[1]) + "," +
               std::to_string((*s.matrix)[2]) + "," + std::to_string((*s.matrix)[3]);
      return out;
    }
    std::string operator()(const G3Spec& s) const {
      std::string out = "g3:p=" + std::to_string(s.p) + ",q=" + std::to_string(s.q) + ",r=" + std::to_string(s.r);
      if (s.mu) out += ",mu=" + std::to_string(*s.mu);
      if (s.v) out += ",v=" + std::to_string(*s.v);
      return out;
    }
    std::string operator()(const PermutationSpec& s) const {
      std::string out = "perm:deg=" + std::to_string(s.degree) + ",gens=";
      for (std::size_t i = 0; i < s.generators.size(); ++i)
        out += (i ? ";" : "") + cycles_text(normalize_cycles(s.generators[i]));
      return out;
    }
    std::string operator()(const DirectProductSpec& s) const { return "prod:" + s.left->text() + "|" + s.right->text(); }
  };
  return std::visit(Visitor{}, value);
}

// --- parser ---------------------------------------------------------------

namespace {

[[noreturn]] void parse_fail(const std::string& text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "cannot parse spec '" + text + "': " + why);
}

int parse_int(const std::string& text, const std::string& s) {
  if (s.empty()) parse_fail(text, "expected a number");
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    parse_fail(text, "bad number '" + s + "'");
  }
  if (pos != s.size()) parse_fail(text, "bad number '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::map<std::string, std::string> parse_kv(const std::string& text, const std::string& body) {
  std::map<std::string, std::string> kv;
  for (const auto& part : split(body, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) parse_fail(text, "expected key=value, got '" + part + "'");
    kv[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return kv;
}

std::vector<std::vector<int>> parse_cycles(const std::string& text, const std::string& s) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') parse_fail(text, "expected '(' in cycle list");
    auto close = s.find(')', i);
    if (close == std::string::npos) parse_fail(text, "unterminated cycle");
    std::string inner = s.substr(i + 1, close - i - 1);
    std::vector<int> cyc;
    if (inner.find(',') != std::string::npos) {
      for (const auto& tok : split(inner, ',')) cyc.push_back(parse_int(text, tok));
    } else {
      // Compact digit form, e.g. (123) meaning the cycle 1 -> 2 -> 3 -> 1.
      for (char c : inner) {
        if (c < '1' || c > '9') parse_fail(text, "compact cycles allow digits 1..9 only");
        cyc.push_back(c - '0');
      }
    }
    if (cyc.size() < 2) parse_fail(text, "cycle needs at least two points");
    cycles.push_back(cyc);
    i = close + 1;
  }
  return cycles;
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) parse_fail(text, "missing ':'");
  std::string head = text.substr(0, colon);
  std::string body = text.substr(colon + 1);

  if (head == "cyclic") return cyclic(parse_int(text, body));
  if (head == "abelian") {
    std::vector<int> orders;
    for (const auto& tok : split(body, 'x')) orders.push_back(parse_int(text, tok));
    return abelian(std::move(orders));
  }
  if (head == "dihedral") return dihedral(parse_int(text, body));
  if (head == "genq") return quaternion(parse_int(text, body));
  if (head == "modular") {
    auto parts = split(body, ',');
    if (parts.size() != 2) parse_fail(text, "modular wants p,alpha");
    return modular(parse_int(text, parts[0]), parse_int(text, parts[1]));
  }
  if (head == "sd") {
    auto kv = parse_kv(text, body);
    for (const char* key : {"q", "p", "a"})
      if (!kv.count(key)) parse_fail(text, std::string("sd needs ") + key + "=");
    int t = kv.count("t") ? parse_int(text, kv["t"]) : 1;
    return semidirect(parse_int(text, kv["q"]), parse_int(text, kv["p"]), parse_int(text, kv["a"]), t);
  }
  if (head == "mat") {
    // The matrix entries contain commas themselves, so carve M= out first.
    std::optional<std::array<int, 4>> matrix;
    std::string rest = body;
    auto mpos = body.find(",M=");
    if (mpos != std::string::npos) {
      auto entries = split(body.substr(mpos + 3), ',');
      if (entries.size() != 4) parse_fail(text, "M= wants four entries");
      matrix = std::array<int, 4>{parse_int(text, entries[0]), parse_int(text, entries[1]), parse_int(text, entries[2]),
                                  parse_int(text, entries[3])};
      rest = body.substr(0, mpos);
    }
    auto kv = parse_kv(text, rest);
    if (!kv.count("p") || !kv.count("m")) parse_fail(text, "mat needs p= and m=");
    return matrix_action(parse_int(text, kv["p"]), parse_int(text, kv["m"]), matrix);
  }
  if (head == "g3") {
    auto kv = parse_kv(text, body);
    for (const char* key : {"p", "q", "r"})
      if (!kv.count(key)) parse_fail(text, std::string("g3 needs ") + key + "=");
    FamilySpec spec = g3(parse_int(text, kv["p"]), parse_int(text, kv["q"]), parse_int(text, kv["r"]));
    auto& g = std::get<G3Spec>(spec.value);
    if (kv.count("mu")) g.mu = parse_int(text, kv["mu"]);
    if (kv.count("v")) g.v = parse_int(text, kv["v"]);
    return spec;
  }
  if (head == "perm") {
    auto gpos = body.find("gens=");
    if (gpos == std::string::npos) parse_fail(text, "perm needs gens=");
    auto kv = parse_kv(text, body.substr(0, gpos ? gpos - 1 : 0));
    if (!kv.count("deg")) parse_fail(text, "perm needs deg=");
    PermutationSpec spec;
    spec.degree = parse_int(text, kv["deg"]);
    for (const auto& gen : split(body.substr(gpos + 5), ';')) spec.generators.push_back(parse_cycles(text, gen));
    if (spec.generators.empty()) parse_fail(text, "perm needs at least one generator");
    return {spec};
  }
  if (head == "prod") {
    // Left side is the shortest prefix (cut at a '|') that parses on its own.
    std::size_t from = 0;
    while (true) {
      auto bar = body.find('|', from);
      if (bar == std::string::npos) parse_fail(text, "prod wants <spec>|<spec>");
      std::string left = body.substr(0, bar);
      try {
        FamilySpec l = parse(left);
        FamilySpec r = parse(body.substr(bar + 1));
        return product(std::move(l), std::move(r));
      } catch (const Error&) {
        from = bar + 1;
      }
    }
  }
  parse_fail(text, "unknown family '" + head + "'");
}

Group build_family(const FamilySpec& spec, int order_budget) {
  const std::string text = spec.text();
  struct Visitor {
    const FamilySpec& spec;
    const std::string& text;
    int budget;
    Group operator()(const CyclicSpec& s) const { return build_cyclic(s, text, budget); }
    Group operator()(const AbelianSpec& s) const { return build_abelian(s, text, budget); }
    Group operator()(const DihedralSpec& s) const { return build_dihedral(s, text, budget); }
    Group operator()(const QuaternionSpec& s) const { return build_quaternion(s, text, budget); }
    Group operator()(const ModularSpec& s) const { return build_modular(s, text, budget); }
    Group operator()(const SemidirectCyclicSpec& s) const { return build_semidirect(s, text, budget); }
    Group operator()(const MatrixActionSpec& s) const { return build_matrix_action(s, text, budget); }
    Group operator()(const G3Spec& s) const { return build_g3(s, text, budget); }
    Group operator()(const PermutationSpec& s) const {
      return build_permutation(s, text, budget, perm_name_hint(s, budget));
    }
    Group operator()(const DirectProductSpec& s) const {
      Group l = build_family(*s.left, budget);
      Group r = build_family(*s.right, budget);
      return direct_product(l, r, budget);
    }
  };
  return std::visit(Visitor{spec, text, order_budget}, spec.value);
}

}  // namespace igx
