#include "veech/sl2.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace veech {

namespace {

std::int64_t checked_dot(std::int64_t x1, std::int64_t y1, std::int64_t x2, std::int64_t y2) {
  std::int64_t p1, p2, s;
  if (__builtin_mul_overflow(x1, y1, &p1) || __builtin_mul_overflow(x2, y2, &p2) ||
      __builtin_add_overflow(p1, p2, &s))
    throw Error(ErrorCode::Overflow, "integer matrix product exceeds 64 bits");
  return s;
}

std::int64_t mod_positive(std::int64_t k, std::int64_t m) {
  auto r = k % m;
  return r < 0 ? r + m : r;
}

}  // namespace

MatZ::MatZ(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_) : a(a_), b(b_), c(c_), d(d_) {
  __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1) throw Error(ErrorCode::BadDet, "matrix " + to_string() + " does not have determinant 1");
}

MatZ operator*(const MatZ& x, const MatZ& y) {
  MatZ r;
  r.a = checked_dot(x.a, y.a, x.b, y.c);
  r.b = checked_dot(x.a, y.b, x.b, y.d);
  r.c = checked_dot(x.c, y.a, x.d, y.c);
  r.d = checked_dot(x.c, y.b, x.d, y.d);
  return r;
}

MatZ MatZ::power(std::int64_t k) const {
  MatZ base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  MatZ r;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::string MatZ::to_string() const {
  std::ostringstream os;
  os << "(" << a << " " << b << "; " << c << " " << d << ")";
  return os.str();
}

void GeneratorWord::append(Generator gen, std::int64_t exponent) {
  if (gen == Generator::S) exponent = mod_positive(exponent, 4);
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == gen) {
    auto& last = syllables_.back();
    last.exponent += exponent;
    if (gen == Generator::S) last.exponent = mod_positive(last.exponent, 4);
    if (last.exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({gen, exponent});
}

std::uint64_t GeneratorWord::length() const {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) {
    auto e = s.exponent;
    if (s.gen == Generator::S && e == 3) e = -1;
    n += static_cast<std::uint64_t>(e < 0 ? -e : e);
  }
  return n;
}

std::vector<std::string> GeneratorWord::letters() const {
  std::vector<std::string> out;
  for (const auto& s : syllables_) {
    auto e = s.exponent;
    if (s.gen == Generator::S && e == 3) e = -1;
    const std::string name = s.gen == Generator::S ? "S" : "T";
    const std::string letter = e < 0 ? name + "^-1" : name;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) out.push_back(letter);
  }
  return out;
}

MatZ GeneratorWord::product() const {
  MatZ r;
  for (const auto& s : syllables_) {
    const MatZ g = s.gen == Generator::S ? MatZ::S().power(s.exponent) : MatZ(1, s.exponent, 0, 1);
    r = r * g;
  }
  return r;
}

std::string GeneratorWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) os << " ";
    first = false;
    os << (s.gen == Generator::S ? "S" : "T");
    if (s.exponent != 1) os << "^" << s.exponent;
  }
  return os.str();
}

GeneratorWord decompose_word(const MatZ& A) {
  GeneratorWord w;
  MatZ m = A;
  while (m.c != 0) {
    // m = T^q S m'  with  m' = S^-1 T^-q m
    const std::int64_t q = m.a / m.c;
    w.append(Generator::T, q);
    w.append(Generator::S, 1);
    m = MatZ::S().inverse() * (MatZ(1, -q, 0, 1) * m);
  }
  if (m.a == 1) {
    w.append(Generator::T, m.b);
  } else {
    // (-1 b; 0 -1) = S^2 T^-b
    w.append(Generator::S, 2);
    w.append(Generator::T, -m.b);
  }
  return w;
}

Origami act_generator(Letter g, const Origami& o) {
  const auto& sx = o.sigma_x();
  const auto& sy = o.sigma_y();
  switch (g) {
    case Letter::S: return Origami(sy.inverse(), sx);
    case Letter::SInv: return Origami(sy, sx.inverse());
    case Letter::T: return Origami(sx, sy * sx.inverse());
    case Letter::TInv: return Origami(sx, sy * sx);
  }
  return o;
}

std::uint32_t CosetAction::apply(Generator g, std::int64_t exponent, std::uint32_t node) const {
  const auto& p = g == Generator::S ? perm_S : perm_T;
  // walk the cycle through node once to learn its length, then reduce the exponent
  std::int64_t len = 1;
  for (auto j = p(node); j != node; j = p(j)) ++len;
  auto steps = mod_positive(exponent, len);
  while (steps--) node = p(node);
  return node;
}

std::uint32_t CosetAction::apply(const GeneratorWord& w, std::uint32_t node) const {
  for (const auto& s : w.syllables()) node = apply(s.gen, s.exponent, node);
  return node;
}

bool CosetAction::is_transitive() const {
  if (perm_S.degree() != perm_T.degree() || perm_S.degree() == 0) return false;
  return !check_origami(perm_S.images(), perm_T.images()).has_value();
}

bool CosetAction::satisfies_relations() const {
  // x.(ST) = perm_T(perm_S(x))
  const auto st = perm_T * perm_S;
  const auto s2 = perm_S * perm_S;
  const auto st3 = st * st * st;
  return (s2 * s2).is_identity() && (st3 * st3).is_identity() && st3 == s2;
}

CosetAction OrbitGraph::action() const {
  return CosetAction{Permutation(s_edge), Permutation(t_edge)};
}

OrbitGraph orbit(const Origami& o) {
  OrbitGraph g;
  std::unordered_map<std::string, std::uint32_t> index;
  auto visit = [&](Origami x) -> std::uint32_t {
    auto key = canonical_key(x);
    auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(g.keys.size()));
    if (inserted) {
      g.keys.push_back(std::move(key));
      g.representatives.push_back(std::move(x));
    }
    return it->second;
  };
  visit(o);
  for (std::size_t i = 0; i < g.keys.size(); ++i) {
    const auto s = visit(act_generator(Letter::S, g.representatives[i]));
    const auto t = visit(act_generator(Letter::T, g.representatives[i]));
    g.s_edge.push_back(s);
    g.t_edge.push_back(t);
  }
  return g;
}

std::vector<MatZ> veech_generators(const CosetAction& a) {
  const auto k = a.size();
  std::vector<MatZ> word(k);
  std::vector<bool> reached(k, false);
  // tree_edge[i] = (parent, generator) that first reached i
  std::vector<std::pair<std::uint32_t, Generator>> tree_edge(k, {UINT32_MAX, Generator::S});
  std::deque<std::uint32_t> queue{CosetAction::base};
  reached[CosetAction::base] = true;
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (auto g : {Generator::S, Generator::T}) {
      const auto j = (g == Generator::S ? a.perm_S : a.perm_T)(i);
      if (!reached[j]) {
        reached[j] = true;
        word[j] = word[i] * (g == Generator::S ? MatZ::S() : MatZ::T());
        tree_edge[j] = {i, g};
        queue.push_back(j);
      }
    }
  }

  std::vector<MatZ> gens;
  for (std::uint32_t i = 0; i < k; ++i) {
    for (auto g : {Generator::S, Generator::T}) {
      const auto j = (g == Generator::S ? a.perm_S : a.perm_T)(i);
      if (tree_edge[j].first == i && tree_edge[j].second == g) continue;
      const MatZ m = g == Generator::S ? MatZ::S() : MatZ::T();
      gens.push_back(word[i] * m * word[j].inverse());
    }
  }
  return gens;
}

}  // namespace veech
