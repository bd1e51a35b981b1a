#include "ocad/dense.hpp"

#include <algorithm>

#include "ocad/errors.hpp"

namespace ocad::dense {

IntPoly::IntPoly(std::vector<mpz_class> coefficients) : c_(std::move(coefficients)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::fromRationals(std::span<const Rational> coefficients) {
  mpz_class lcm = 1;
  for (const auto& c : coefficients) {
    if (!c.isZero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  std::vector<mpz_class> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) {
    mpz_class v = c.raw().get_num() * (lcm / c.raw().get_den());
    out.push_back(std::move(v));
  }
  return IntPoly(std::move(out)).primitive();
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return *this;
  const mpz_class g = content();
  if (g == 1) return *this;
  std::vector<mpz_class> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<mpz_class> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::negated() const {
  IntPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

int IntPoly::signAt(const Rational& x) const {
  if (c_.empty()) return 0;
  // value * den^d = sum c_i num^i den^(d-i), evaluated by Horner from the top.
  const mpz_class num = x.raw().get_num();
  const mpz_class den = x.raw().get_den();
  mpz_class acc = c_.back();
  mpz_class denPow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    denPow *= den;
    acc *= num;
    acc += c_[i] * denPow;
  }
  return sgn(acc);
}

Rational IntPoly::valueAt(const Rational& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x.raw();
    acc += c_[i];
  }
  return Rational(acc);
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.isZero() || b.isZero()) return IntPoly();
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly pseudoRemainder(const IntPoly& a, const IntPoly& b) {
  if (b.isZero()) throw InternalError("pseudo-remainder by zero");
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  const mpz_class scale = abs(b.leading());
  const int bsign = sgn(b.leading());
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    const mpz_class lead = bsign > 0 ? mpz_class(r.back()) : mpz_class(-r.back());
    for (auto& x : r) x *= scale;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[j + shift].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly exactQuotient(const IntPoly& a, const IntPoly& b) {
  if (b.isZero()) throw InternalError("division by the zero polynomial");
  if (a.isZero()) return IntPoly();
  if (a.degree() < b.degree()) throw InternalError("inexact polynomial division");
  std::vector<mpz_class> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(r.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) throw InternalError("inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  for (const auto& x : r) {
    if (x != 0) throw InternalError("inexact polynomial division");
  }
  return IntPoly(std::move(q));
}

namespace {

IntPoly positiveLeading(IntPoly p) { return (!p.isZero() && sgn(p.leading()) < 0) ? p.negated() : p; }

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.isZero()) return positiveLeading(b.primitive());
  if (b.isZero()) return positiveLeading(a.primitive());
  IntPoly x = a.primitive();
  IntPoly y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.isZero()) {
    if (y.degree() == 0) return IntPoly({mpz_class(1)});
    IntPoly r = pseudoRemainder(x, y);
    x = std::move(y);
    y = r.primitive();
  }
  return positiveLeading(x);
}

IntPoly squarefreePart(const IntPoly& p) {
  if (p.degree() <= 0) return positiveLeading(p.primitive());
  const IntPoly g = gcd(p, p.derivative());
  const IntPoly prim = p.primitive();
  if (g.degree() == 0) return positiveLeading(prim);
  return positiveLeading(exactQuotient(prim, g).primitive());
}

std::vector<IntPoly> sturmChain(const IntPoly& squarefree) {
  if (squarefree.degree() < 1) throw InvalidArgument("Sturm chain of a constant polynomial");
  std::vector<IntPoly> chain{squarefree.primitive(), squarefree.derivative().primitive()};
  while (chain.back().degree() > 0) {
    IntPoly r = pseudoRemainder(chain[chain.size() - 2], chain.back());
    if (r.isZero()) break;
    chain.push_back(r.negated().primitive());
  }
  return chain;
}

int signVariations(const std::vector<IntPoly>& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = p.signAt(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

namespace {

// Smallest e with 2^e >= r, for r > 0.
long ceilLog2(const Rational& r) {
  const mpz_class num = r.numerator();
  const mpz_class den = r.denominator();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 2;
  auto atLeast = [&](long k) {
    mpz_class lhs = den, rhs = num;
    if (k >= 0) {
      lhs <<= static_cast<mp_bitcnt_t>(k);
    } else {
      rhs <<= static_cast<mp_bitcnt_t>(-k);
    }
    return lhs >= rhs;
  };
  while (!atLeast(e)) ++e;
  return e;
}

long ceilDiv(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

Rational powerOfTwo(long e) {
  mpz_class one = 1;
  if (e >= 0) return Rational(mpz_class(one << static_cast<mp_bitcnt_t>(e)));
  return Rational(one, mpz_class(one << static_cast<mp_bitcnt_t>(-e)));
}

}  // namespace

Rational rootBound(const IntPoly& p) {
  if (p.degree() < 1) throw InvalidArgument("root bound of a constant polynomial");
  const auto& c = p.coefficients();
  const int d = p.degree();
  const mpz_class lead = abs(c.back());

  mpz_class maxAbs = 0;
  for (int i = 0; i < d; ++i) maxAbs = std::max(maxAbs, mpz_class(abs(c[i])));
  const Rational cauchy = Rational(1) + Rational(maxAbs, lead);

  bool any = false;
  long best = 0;
  for (int i = 1; i <= d; ++i) {
    const mpz_class& a = c[d - i];
    if (a == 0) continue;
    const long k = ceilDiv(ceilLog2(Rational(mpz_class(abs(a)), lead)), i);
    best = any ? std::max(best, k) : k;
    any = true;
  }
  if (!any) return cauchy;
  const Rational fujiwara = Rational(2) * powerOfTwo(best);
  return std::min(cauchy, fujiwara);
}

namespace {

class Isolator {
 public:
  explicit Isolator(const IntPoly& p) : p_(p), chain_(sturmChain(p)) {}

  // Distinct roots strictly inside (a, b); endpoints may be roots.
  int countOpen(const Rational& a, const Rational& b) const {
    return signVariations(chain_, a) - signVariations(chain_, b) - (p_.signAt(b) == 0 ? 1 : 0);
  }

  std::vector<Interval> run() {
    Rational bound = rootBound(p_);
    while (p_.signAt(bound) == 0 || p_.signAt(-bound) == 0) bound *= Rational(2);

    // The first split is always at 0, so a root there is reported exactly.
    std::vector<Interval> found;
    if (p_.signAt(Rational(0)) == 0) found.push_back({Rational(0), Rational(0)});
    std::vector<std::pair<Rational, Rational>> work{{Rational(0), bound}, {-bound, Rational(0)}};
    while (!work.empty()) {
      auto [a, b] = std::move(work.back());
      work.pop_back();
      const int count = countOpen(a, b);
      if (count == 0) continue;
      if (count == 1 && p_.signAt(a) != 0 && p_.signAt(b) != 0) {
        found.push_back({a, b});
        continue;
      }
      Rational mid = (a + b) / Rational(2);
      if (p_.signAt(mid) == 0) found.push_back({mid, mid});
      work.emplace_back(mid, std::move(b));
      work.emplace_back(std::move(a), std::move(mid));
    }
    std::sort(found.begin(), found.end(), [](const Interval& x, const Interval& y) { return x.low < y.low; });
    separate(found);
    return found;
  }

  // One bisection step on an interval with a single simple root.
  Interval halve(const Interval& iv) const {
    const Rational mid = (iv.low + iv.high) / Rational(2);
    const int sm = p_.signAt(mid);
    if (sm == 0) return {mid, mid};
    if (p_.signAt(iv.low) != sm) return {iv.low, mid};
    return {mid, iv.high};
  }

 private:
  // Intervals that touch a neighbour are bisected (both sides at once) until
  // every consecutive pair has a strict gap; the rest are left alone.
  void separate(std::vector<Interval>& ivs) const {
    for (;;) {
      std::vector<bool> touching(ivs.size(), false);
      bool any = false;
      for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
        if (ivs[i].high >= ivs[i + 1].low) {
          touching[i] = touching[i + 1] = true;
          any = true;
        }
      }
      if (!any) return;
      for (std::size_t i = 0; i < ivs.size(); ++i) {
        if (touching[i] && !ivs[i].isPoint()) ivs[i] = halve(ivs[i]);
      }
    }
  }

  const IntPoly& p_;
  std::vector<IntPoly> chain_;
};

}  // namespace

std::vector<Interval> isolateRoots(const IntPoly& squarefree) {
  if (squarefree.degree() < 1) throw InvalidArgument("root isolation of a constant polynomial");
  return Isolator(squarefree).run();
}

Interval refine(const IntPoly& squarefree, Interval interval, const Rational& maxWidth) {
  if (interval.isPoint()) return interval;
  Isolator iso(squarefree);
  while (!interval.isPoint() && interval.high - interval.low >= maxWidth) interval = iso.halve(interval);
  return interval;
}

std::vector<Rational> rationalRoots(const IntPoly& p) {
  if (p.degree() < 1) return {};
  const IntPoly sf = squarefreePart(p);
  std::vector<Rational> roots;
  // A rational root num/den of a primitive polynomial has den | lc, so
  // lc * root is an integer; an interval of width < 1/|lc| holds at most one
  // candidate.
  const Rational lead(mpz_class(abs(sf.leading())));
  const Rational width = lead.inverse();
  for (auto iv : isolateRoots(sf)) {
    iv = refine(sf, iv, width);
    if (iv.isPoint()) {
      roots.push_back(iv.low);
      continue;
    }
    mpz_class k;
    const mpq_class scaled = iv.low.raw() * lead.raw();
    mpz_cdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const Rational candidate = Rational(k) / lead;
    if (candidate >= iv.low && candidate <= iv.high && sf.signAt(candidate) == 0) roots.push_back(candidate);
  }
  return roots;
}

}  // namespace ocad::dense
