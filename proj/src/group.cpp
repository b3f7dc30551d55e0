#include "igx/group.hpp"

#include <algorithm>
#include <numeric>

#include "igx/error.hpp"

namespace igx {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::OrderBudgetExceeded: return "OrderBudgetExceeded";
    case ErrorCode::MalformedExpression: return "MalformedExpression";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Group::Group(std::string name, std::string spec_text, int order, std::vector<Elem> table)
    : name_(std::move(name)), spec_text_(std::move(spec_text)), order_(order), table_(std::move(table)) {
  if (order_ <= 0 || table_.size() != std::size_t(order_) * order_)
    throw Error(ErrorCode::InvalidParameters, "group table has wrong size");
  inverse_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    bool found = false;
    for (int b = 0; b < order_; ++b) {
      if (mul(Elem(a), Elem(b)) == 0 && mul(Elem(b), Elem(a)) == 0) {
        inverse_[a] = Elem(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidParameters, "group table lacks an inverse");
  }
}

Elem Group::power(Elem a, long long k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  Elem acc = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int Group::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool Group::abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
  return true;
}

int Group::exponent() const {
  long long e = 1;
  for (int a = 0; a < order_; ++a) e = std::lcm(e, (long long)element_order(Elem(a)));
  return int(e);
}

AxiomReport verify_group_axioms(const Group& g) {
  AxiomReport r;
  const int n = g.order();

  r.closed = true;
  for (int a = 0; a < n && r.closed; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul(Elem(a), Elem(b)) >= n) {
        r.closed = false;
        break;
      }

  r.has_identity = true;
  for (int a = 0; a < n; ++a)
    if (g.mul(0, Elem(a)) != a || g.mul(Elem(a), 0) != a) {
      r.has_identity = false;
      break;
    }

  r.associative = true;
  for (int a = 0; a < n && r.associative; ++a)
    for (int b = 0; b < n && r.associative; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(Elem(a), Elem(b)), Elem(c)) != g.mul(Elem(a), g.mul(Elem(b), Elem(c)))) {
          r.associative = false;
          r.associativity_witness = {Elem(a), Elem(b), Elem(c)};
          break;
        }

  r.has_inverses = true;
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b)
      if (g.mul(Elem(a), Elem(b)) == 0 && g.mul(Elem(b), Elem(a)) == 0) {
        found = true;
        break;
      }
    if (!found) {
      r.has_inverses = false;
      break;
    }
  }
  return r;
}

Group direct_product(const Group& g, const Group& h, int order_budget) {
  long long n = (long long)g.order() * h.order();
  if (n > order_budget)
    throw Error(ErrorCode::OrderBudgetExceeded,
                "direct product order " + std::to_string(n) + " exceeds budget " + std::to_string(order_budget));
  const int ng = g.order(), nh = h.order();
  std::vector<Elem> table(std::size_t(n) * n);
  // Mixed-radix encoding (x, y) -> x*|h| + y keeps element 0 as identity.
  for (int x1 = 0; x1 < ng; ++x1)
    for (int y1 = 0; y1 < nh; ++y1)
      for (int x2 = 0; x2 < ng; ++x2)
        for (int y2 = 0; y2 < nh; ++y2) {
          int a = x1 * nh + y1, b = x2 * nh + y2;
          table[std::size_t(a) * n + b] = Elem(g.mul(Elem(x1), Elem(x2)) * nh + h.mul(Elem(y1), Elem(y2)));
        }
  return Group(g.name() + " x " + h.name(), "prod:" + g.spec_text() + "|" + h.spec_text(), int(n), std::move(table));
}

namespace {

// Minimal generating sequence by greedy closure growth.
std::vector<Elem> small_generating_set(const Group& g) {
  const int n = g.order();
  std::vector<Elem> gens;
  std::vector<char> in(n, 0);
  std::vector<Elem> closure{0};
  in[0] = 1;
  while ((int)closure.size() < n) {
    Elem next = 0;
    for (int x = 0; x < n; ++x)
      if (!in[x]) {
        next = Elem(x);
        break;
      }
    gens.push_back(next);
    // close under multiplication
    std::vector<Elem> frontier{next};
    in[next] = 1;
    closure.push_back(next);
    while (!frontier.empty()) {
      Elem f = frontier.back();
      frontier.pop_back();
      std::size_t count = closure.size();
      for (std::size_t i = 0; i < count; ++i) {
        for (Elem p : {g.mul(closure[i], f), g.mul(f, closure[i])}) {
          if (!in[p]) {
            in[p] = 1;
            closure.push_back(p);
            frontier.push_back(p);
          }
        }
      }
    }
  }
  return gens;
}

// Derivations: each non-identity element reached as parent * gens[gen_idx],
// in a BFS order that lets images be filled in one pass.
struct Derivation {
  std::vector<Elem> bfs_order;     // excludes identity
  std::vector<Elem> parent;        // per element
  std::vector<int> via_gen;        // per element, index into gens
};

Derivation derive_all(const Group& g, const std::vector<Elem>& gens) {
  const int n = g.order();
  Derivation d;
  d.parent.assign(n, 0);
  d.via_gen.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem x = queue[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Elem y = g.mul(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        d.parent[y] = x;
        d.via_gen[y] = int(gi);
        d.bfs_order.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return d;
}

bool try_generator_images(const Group& a, const Group& b, const std::vector<Elem>& gens, const Derivation& deriv,
                          const std::vector<Elem>& images) {
  const int n = a.order();
  std::vector<int> image(n, -1);
  image[0] = 0;
  for (Elem x : deriv.bfs_order) image[x] = b.mul(Elem(image[deriv.parent[x]]), images[deriv.via_gen[x]]);
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    if (image[x] < 0 || hit[image[x]]) return false;
    hit[image[x]] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (image[a.mul(Elem(x), Elem(y))] != b.mul(Elem(image[x]), Elem(image[y]))) return false;
  return true;
}

bool search_images(const Group& a, const Group& b, const std::vector<Elem>& gens, const Derivation& deriv,
                   std::vector<Elem>& images, std::size_t idx, const std::vector<int>& order_a,
                   const std::vector<int>& order_b) {
  if (idx == gens.size()) return try_generator_images(a, b, gens, deriv, images);
  for (int y = 1; y < b.order(); ++y) {
    if (order_b[y] != order_a[gens[idx]]) continue;
    images[idx] = Elem(y);
    if (search_images(a, b, gens, deriv, images, idx + 1, order_a, order_b)) return true;
  }
  return false;
}

}  // namespace

bool tables_isomorphic(const Group& a, const Group& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> order_a(n), order_b(n);
  for (int x = 0; x < n; ++x) {
    order_a[x] = a.element_order(Elem(x));
    order_b[x] = b.element_order(Elem(x));
  }
  {
    auto sa = order_a, sb = order_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<Elem> gens = small_generating_set(a);
  Derivation deriv = derive_all(a, gens);
  std::vector<Elem> images(gens.size(), 0);
  return search_images(a, b, gens, deriv, images, 0, order_a, order_b);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long power_mod(long long base, long long exp, long long mod) {
  long long acc = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return acc;
}

int multiplicative_order(int a, int mod) {
  if (std::gcd(a, mod) != 1) return 0;
  long long x = a % mod;
  int k = 1;
  while (x != 1 % mod) {
    x = x * a % mod;
    ++k;
    if (k > mod) return 0;
  }
  return k;
}

}  // namespace igx
