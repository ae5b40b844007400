#include "cozero/finite_ring.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include "cozero/error.hpp"

namespace cozero {

namespace {

std::atomic<RingId> next_ring_id{1};

std::string triple(std::string_view a, std::string_view b, std::string_view c) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ")";
  return out.str();
}

[[noreturn]] void violation(const std::string& axiom, const std::string& witness) {
  throw Error(ErrorKind::axiom_violation,
              "axiom violation: " + axiom + " fails at " + witness);
}

// Polynomials over Z_p stored low coefficient first, fixed length.
using Poly = std::vector<std::uint64_t>;

Poly decode(std::uint64_t code, std::uint64_t p, std::size_t len) {
  Poly c(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint64_t encode(const Poly& c, std::uint64_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Remainder of `num` modulo a monic polynomial `monic` (full coefficient
// list including the leading 1).
Poly remainder_monic(Poly num, const Poly& monic, std::uint64_t p) {
  const std::size_t d = monic.size() - 1;
  for (std::size_t i = num.size(); i-- > d;) {
    const std::uint64_t c = num[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      num[i - d + j] = (num[i - d + j] + (p - c) * monic[j]) % p;
  }
  num.resize(d);
  return num;
}

bool is_irreducible(const Poly& monic, std::uint64_t p) {
  const std::size_t k = monic.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      Poly r = remainder_monic(monic, g, p);
      bool zero = true;
      for (auto c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::string poly_label(const Poly& c) {
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::uint64_t checked_order(std::uint64_t base, std::uint64_t exp, std::size_t cap) {
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    n *= base;
    if (n > cap)
      throw Error(ErrorKind::cap_exceeded,
                  "ring order exceeds cap " + std::to_string(cap));
  }
  return n;
}

RingPtr build_poly_quotient(std::string name, std::uint64_t p, Poly monic,
                            std::size_t cap) {
  const std::size_t d = monic.size() - 1;
  const std::uint64_t n = checked_order(p, d, cap);
  std::vector<std::string> labels(n);
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<Poly> elems(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    elems[i] = decode(i, p, d);
    labels[i] = poly_label(elems[i]);
  }
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      Poly s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      add[a * n + b] = static_cast<Index>(encode(s, p));
      Poly prod(2 * d - 1, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
      if (prod.size() < d) prod.resize(d, 0);
      mul[a * n + b] = static_cast<Index>(encode(remainder_monic(prod, monic, p), p));
    }
  }
  return FiniteRing::from_tables(std::move(name), std::move(labels), std::move(add),
                                 std::move(mul));
}

RingPtr build_cyclic(std::uint64_t n, std::size_t cap) {
  if (n > cap)
    throw Error(ErrorKind::cap_exceeded,
                "ring order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<std::string> labels(n);
  std::vector<Index> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Index>((a + b) % n);
      mul[a * n + b] = static_cast<Index>((a * b) % n);
    }
  }
  return FiniteRing::from_tables(to_string(RingSpec::cyclic(n)), std::move(labels),
                                 std::move(add), std::move(mul));
}

// Mixed radix with the first factor most significant, so indices follow the
// lexicographic order of the tuples.
RingPtr build_product(const std::vector<std::uint64_t>& factors, std::size_t cap) {
  std::uint64_t n = 1;
  for (auto f : factors) {
    n *= f;
    if (n > cap)
      throw Error(ErrorKind::cap_exceeded,
                  "ring order exceeds cap " + std::to_string(cap));
  }
  const std::size_t m = factors.size();
  auto digits = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> d(m);
    for (std::size_t i = m; i-- > 0;) {
      d[i] = idx % factors[i];
      idx /= factors[i];
    }
    return d;
  };
  auto combine = [&](const std::vector<std::uint64_t>& d) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < m; ++i) idx = idx * factors[i] + d[i];
    return static_cast<Index>(idx);
  };
  std::vector<std::vector<std::uint64_t>> tuples(n);
  std::vector<std::string> labels(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    tuples[i] = digits(i);
    std::string l = "(";
    for (std::size_t j = 0; j < m; ++j) l += (j ? "," : "") + std::to_string(tuples[i][j]);
    labels[i] = l + ")";
  }
  std::vector<Index> add(n * n), mul(n * n);
  std::vector<std::uint64_t> s(m), p(m);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      for (std::size_t j = 0; j < m; ++j) {
        s[j] = (tuples[a][j] + tuples[b][j]) % factors[j];
        p[j] = (tuples[a][j] * tuples[b][j]) % factors[j];
      }
      add[a * n + b] = combine(s);
      mul[a * n + b] = combine(p);
    }
  }
  return FiniteRing::from_tables(to_string(RingSpec::product(factors)), std::move(labels),
                                 std::move(add), std::move(mul));
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::not_an_ideal: return "not-an-ideal";
    case ErrorKind::domain: return "domain";
    case ErrorKind::not_a_vertex: return "not-a-vertex";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
  }
  return "unknown";
}

std::shared_ptr<const FiniteRing> FiniteRing::from_tables(
    std::string name, std::vector<std::string> labels, std::vector<Index> add_table,
    std::vector<Index> mul_table) {
  const std::size_t n = labels.size();
  if (n < 2)
    throw Error(ErrorKind::invalid_spec, "non-zero identity required: ring order must be >= 2");
  if (add_table.size() != n * n || mul_table.size() != n * n)
    throw Error(ErrorKind::parse, "operation tables must be order x order");
  for (std::size_t i = 0; i < n * n; ++i)
    if (add_table[i] >= n || mul_table[i] >= n)
      throw Error(ErrorKind::parse, "table entry out of range");

  auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return add_table[a * n + b]; };
  auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return mul_table[a * n + b]; };
  auto L = [&](std::size_t i) -> const std::string& { return labels[i]; };

  std::size_t zero = n;
  for (std::size_t z = 0; z < n && zero == n; ++z) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = A(z, a) == a && A(a, z) == a;
    if (ok) zero = z;
  }
  if (zero == n) violation("additive identity", "every candidate");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) violation("additive commutativity", "(" + L(a) + ", " + L(b) + ")");
      if (M(a, b) != M(b, a))
        violation("multiplicative commutativity", "(" + L(a) + ", " + L(b) + ")");
    }

  std::vector<Index> neg(n, static_cast<Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (A(a, b) == zero) {
        neg[a] = static_cast<Index>(b);
        break;
      }
    if (neg[a] == n) violation("additive inverse", "(" + L(a) + ")");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c)))
          violation("additive associativity", triple(L(a), L(b), L(c)));
        if (M(M(a, b), c) != M(a, M(b, c)))
          violation("multiplicative associativity", triple(L(a), L(b), L(c)));
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          violation("distributivity", triple(L(a), L(b), L(c)));
      }

  std::size_t one = n;
  for (std::size_t u = 0; u < n && one == n; ++u) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = M(u, a) == a;
    if (ok) one = u;
  }
  if (one == n) violation("multiplicative identity", "every candidate");
  if (one == zero)
    throw Error(ErrorKind::invalid_spec, "non-zero identity required: 1 = 0");

  std::shared_ptr<FiniteRing> ring(new FiniteRing());
  ring->id_ = next_ring_id.fetch_add(1);
  ring->order_ = n;
  ring->name_ = std::move(name);
  ring->labels_ = std::move(labels);
  ring->add_ = std::move(add_table);
  ring->mul_ = std::move(mul_table);
  ring->neg_ = std::move(neg);
  ring->zero_ = static_cast<Index>(zero);
  ring->one_ = static_cast<Index>(one);
  return ring;
}

Index FiniteRing::pow(Index a, std::uint64_t e) const {
  Index result = one_;
  Index base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteRing::element(Index i) const {
  if (i >= order_)
    throw Error(ErrorKind::domain, "element index " + std::to_string(i) +
                                       " out of range for " + name_);
  return Element{id_, i};
}

void FiniteRing::require_same_ring(Element e) const {
  if (e.ring != id_) throw Error(ErrorKind::ring_mismatch, "element belongs to another ring");
  if (e.idx >= order_) throw Error(ErrorKind::domain, "element index out of range");
}

void FiniteRing::require_same_ring(const Ideal& ideal) const {
  if (ideal.ring_id() != id_)
    throw Error(ErrorKind::ring_mismatch, "ideal belongs to another ring");
}

Element FiniteRing::add(Element a, Element b) const {
  require_same_ring(a);
  require_same_ring(b);
  return Element{id_, add(a.idx, b.idx)};
}

Element FiniteRing::mul(Element a, Element b) const {
  require_same_ring(a);
  require_same_ring(b);
  return Element{id_, mul(a.idx, b.idx)};
}

Element FiniteRing::neg(Element a) const {
  require_same_ring(a);
  return Element{id_, neg(a.idx)};
}

Element FiniteRing::pow(Element a, std::uint64_t e) const {
  require_same_ring(a);
  return Element{id_, pow(a.idx, e)};
}

const ElementSet& FiniteRing::units() const {
  std::call_once(cache_->units_once, [this] {
    ElementSet u(order_);
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b)
        if (mul(a, b) == one_) {
          u.insert(a);
          break;
        }
    cache_->units = std::move(u);
  });
  return cache_->units;
}

const ElementSet& FiniteRing::zero_divisors() const {
  std::call_once(cache_->zd_once, [this] {
    ElementSet z(order_);
    for (Index a = 0; a < order_; ++a)
      for (Index b = 0; b < order_; ++b)
        if (b != zero_ && mul(a, b) == zero_) {
          z.insert(a);
          break;
        }
    cache_->zero_divisors = std::move(z);
  });
  return cache_->zero_divisors;
}

Ideal FiniteRing::zero_ideal() const {
  return Ideal(id_, ElementSet(order_, {zero_}), {zero_});
}

Ideal FiniteRing::unit_ideal() const { return Ideal(id_, full_set(), {one_}); }

RingPtr load_table_ring(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "table: cannot open '" + path + "'");
  long long n = 0;
  if (!(in >> n) || n < 0)
    throw Error(ErrorKind::parse, "table: expected ring order on first line");
  if (static_cast<unsigned long long>(n) > order_cap)
    throw Error(ErrorKind::cap_exceeded,
                "ring order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  if (n < 2)
    throw Error(ErrorKind::invalid_spec, "non-zero identity required: ring order must be >= 2");
  const auto size = static_cast<std::size_t>(n);
  std::vector<Index> add(size * size), mul(size * size);
  auto read = [&](std::vector<Index>& table, const char* which) {
    for (auto& v : table) {
      long long x = 0;
      if (!(in >> x) || x < 0 || x >= n)
        throw Error(ErrorKind::parse, std::string("table: bad or missing ") + which + " entry");
      v = static_cast<Index>(x);
    }
  };
  read(add, "add");
  read(mul, "mul");
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::parse, "table: trailing data '" + extra + "'");
  std::vector<std::string> labels(size);
  for (std::size_t i = 0; i < size; ++i) labels[i] = std::to_string(i);
  return FiniteRing::from_tables("table:" + path, std::move(labels), std::move(add),
                                 std::move(mul));
}

RingPtr build_ring(const RingSpec& spec, std::size_t order_cap) {
  validate(spec);
  switch (spec.kind) {
    case RingKind::cyclic:
      return build_cyclic(spec.n, order_cap);
    case RingKind::product:
      return build_product(spec.factors, order_cap);
    case RingKind::galois_field: {
      const auto n = checked_order(spec.p, spec.k, order_cap);
      const std::size_t k = spec.k;
      for (std::uint64_t code = 0; code < n; ++code) {
        Poly f = decode(code, spec.p, k);
        f.push_back(1);
        if (is_irreducible(f, spec.p))
          return build_poly_quotient(to_string(spec), spec.p, std::move(f), order_cap);
      }
      throw Error(ErrorKind::invalid_spec, "gf: no irreducible polynomial found");
    }
    case RingKind::poly_quotient: {
      Poly f;
      for (auto c : spec.coefficients) f.push_back(c % spec.p);
      while (!f.empty() && f.back() == 0) f.pop_back();
      const auto inv = inverse_mod(f.back(), spec.p);
      for (auto& c : f) c = c * inv % spec.p;
      return build_poly_quotient(to_string(spec), spec.p, std::move(f), order_cap);
    }
    case RingKind::table:
      return load_table_ring(spec.path, order_cap);
  }
  throw Error(ErrorKind::invalid_spec, "unknown ring kind");
}

RingPtr build_ring(std::string_view spec_text, std::size_t order_cap) {
  return build_ring(parse_ring_spec(spec_text), order_cap);
}

}  // namespace cozero
