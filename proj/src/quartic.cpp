#include "veech/quartic.hpp"

#include <cctype>
#include <deque>
#include <stdexcept>

#include "veech/modular.hpp"

namespace veech {

namespace {

std::string rational_term(const Rational& c, const std::string& unit, bool first) {
  std::string s;
  if (!first) s += c < 0 ? " - " : " + ";
  else if (c < 0) s += "-";
  const Rational mag = c < 0 ? Rational(-c) : c;
  if (unit.empty() || mag != 1) s += mag.str() + (unit.empty() ? "" : "*");
  return s + unit;
}

std::int64_t reduce_mod(const Rational& x, std::int64_t q) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(x);
  const cpp_int den = boost::multiprecision::denominator(x);
  const auto d = mod_reduce(static_cast<std::int64_t>(den % q), q);
  if (d == 0) throw Error(ErrorCode::BadModulus, std::to_string(q) + " divides a parameter denominator");
  const auto nr = static_cast<std::int64_t>(num % q);
  return mod_reduce(mod_reduce(nr, q) * mod_inverse(d, q), q);
}

}  // namespace

std::string GaussRing::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (re != 0) s += rational_term(re, "", true);
  if (im != 0) s += rational_term(im, "i", re == 0);
  return s;
}

std::string Root8Ring::to_string() const {
  if (is_zero()) return "0";
  static const std::array<std::string, 4> units{"", "t", "t^2", "t^3"};
  std::string s;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (c[k] == 0) continue;
    s += rational_term(c[k], units[k], first);
    first = false;
  }
  return s;
}

Root8Ring operator+(const Root8Ring& x, const Root8Ring& y) {
  Root8Ring r;
  for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] + y.c[k];
  return r;
}

Root8Ring operator-(const Root8Ring& x, const Root8Ring& y) {
  Root8Ring r;
  for (int k = 0; k < 4; ++k) r.c[k] = x.c[k] - y.c[k];
  return r;
}

Root8Ring operator*(const Root8Ring& x, const Root8Ring& y) {
  Root8Ring r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Rational p = x.c[i] * y.c[j];
      if (i + j < 4) r.c[i + j] += p;
      else r.c[i + j - 4] += 8 * p;  // t^4 = 8
    }
  return r;
}

Rational criterion_polynomial(const QuarticParams& p) {
  return p.a * p.a + p.b * p.b + p.c * p.c - 2 * p.a * p.b * p.c - 1;
}

bool is_singular(const QuarticParams& p) {
  for (const auto& v : {p.a, p.b, p.c})
    if (v == 1 || v == -1) return true;
  return criterion_polynomial(p) == 0;
}

std::vector<ProjPoint> singular_points_mod_q(const QuarticParams& p, std::int64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) throw Error(ErrorCode::BadModulus, "q must be an odd prime");
  if (q > 4093) throw Error(ErrorCode::BadModulus, "q too large for the brute-force sweep");
  const auto a = reduce_mod(p.a, q), b = reduce_mod(p.b, q), c = reduce_mod(p.c, q);

  auto vanishes = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    const auto x2 = x * x % q, y2 = y * y % q, z2 = z * z % q;
    const auto f = (x2 * x2 + y2 * y2 + z2 * z2 + 2 * a * (x2 * y2 % q) + 2 * b * (x2 * z2 % q) +
                    2 * c * (y2 * z2 % q)) % q;
    // partials divided by 4
    const auto fx = x * ((x2 + a * y2 + b * z2) % q) % q;
    const auto fy = y * ((y2 + a * x2 + c * z2) % q) % q;
    const auto fz = z * ((z2 + b * x2 + c * y2) % q) % q;
    return f == 0 && fx == 0 && fy == 0 && fz == 0;
  };

  std::vector<ProjPoint> out;
  for (std::int64_t y = 0; y < q; ++y)
    for (std::int64_t z = 0; z < q; ++z)
      if (vanishes(1, y, z)) out.push_back({1, y, z});
  for (std::int64_t z = 0; z < q; ++z)
    if (vanishes(0, 1, z)) out.push_back({0, 1, z});
  if (vanishes(0, 0, 1)) out.push_back({0, 0, 1});
  return out;
}

ParamSymmetry::ParamSymmetry(std::array<int, 3> perm, std::array<int, 3> sign) : perm_(perm), sign_(sign) {
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw Error(ErrorCode::InvalidConfig, "not a slot permutation");
  for (int s : sign)
    if (s != 1 && s != -1) throw Error(ErrorCode::InvalidConfig, "signs must be +-1");
  if (sign[0] * sign[1] * sign[2] != 1) throw Error(ErrorCode::InvalidConfig, "sign product must be +1");
}

QuarticParams ParamSymmetry::apply(const QuarticParams& p) const {
  const std::array<Rational, 3> in{p.a, p.b, p.c};
  return {sign_[0] * in[perm_[0]], sign_[1] * in[perm_[1]], sign_[2] * in[perm_[2]]};
}

ParamSymmetry operator*(const ParamSymmetry& g, const ParamSymmetry& h) {
  // (g . (h . p))_k = g.sign[k] * h.sign[g.perm[k]] * p_{h.perm[g.perm[k]]}
  std::array<int, 3> perm{}, sign{};
  for (int k = 0; k < 3; ++k) {
    perm[k] = h.perm_[g.perm_[k]];
    sign[k] = g.sign_[k] * h.sign_[g.perm_[k]];
  }
  return {perm, sign};
}

int ParamSymmetry::order() const {
  int k = 1;
  for (auto x = *this; !(x == identity()); x = x * *this) ++k;
  return k;
}

std::vector<ParamSymmetry> generate_group(const std::vector<ParamSymmetry>& gens) {
  std::set<ParamSymmetry> seen{ParamSymmetry::identity()};
  std::deque<ParamSymmetry> queue{ParamSymmetry::identity()};
  while (!queue.empty()) {
    const auto g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto h = g * s;
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ParamSymmetry> param_group_L() {
  return generate_group({ParamSymmetry({1, 0, 2}, {1, 1, 1}), ParamSymmetry({0, 2, 1}, {1, 1, 1}),
                         ParamSymmetry({0, 1, 2}, {-1, -1, 1})});
}

std::vector<ParamSymmetry> subgroup_L_H() {
  return generate_group({ParamSymmetry({1, 0, 2}, {1, 1, 1}), ParamSymmetry({0, 1, 2}, {-1, -1, 1}),
                         ParamSymmetry({0, 1, 2}, {-1, 1, -1})});
}

std::array<int, 4> order_profile(const std::vector<ParamSymmetry>& group) {
  std::array<int, 4> out{};
  for (const auto& g : group) {
    const int k = g.order();
    if (k < 1 || k > 4) throw std::logic_error("unexpected element order");
    ++out[k - 1];
  }
  return out;
}

std::set<QuarticParams> orbit_under(const std::vector<ParamSymmetry>& group, const QuarticParams& p) {
  std::set<QuarticParams> out;
  for (const auto& g : group) out.insert(g.apply(p));
  return out;
}

std::vector<Mat3<GaussRing>> alpha_commuting_matrices() {
  const std::array<GaussRing, 4> units{GaussRing::from(1), GaussRing::i(), GaussRing::from(-1),
                                       GaussRing::from(0) - GaussRing::i()};
  const auto zero = GaussRing::from(0);
  std::vector<Mat3<GaussRing>> out;
  for (int anti = 0; anti < 2; ++anti)
    for (const auto& v : units)
      for (const auto& r : units)
        for (const auto& u : units) {
          Mat3<GaussRing> M{{{v, zero, zero}, {zero, zero, zero}, {zero, zero, zero}}};
          if (anti) {
            M[1][2] = r;
            M[2][1] = u;
          } else {
            M[1][1] = r;
            M[2][2] = u;
          }
          out.push_back(M);
        }
  return out;
}

Rational lambda_a_convert(const Rational& value, LambdaDirection dir) {
  if (dir == LambdaDirection::LambdaToA && (value == 0 || value == 1))
    throw Error(ErrorCode::ExcludedValue, "lambda must avoid 0 and 1");
  if (dir == LambdaDirection::AToLambda && (value == 1 || value == -1))
    throw Error(ErrorCode::ExcludedValue, "a must avoid 1 and -1");
  return (value + 1) / (value - 1);
}

std::set<Rational> legendre_orbit(const Rational& l) {
  if (l == 0 || l == 1) throw Error(ErrorCode::ExcludedValue, "lambda must avoid 0 and 1");
  return {l, 1 / l, 1 - l, 1 - 1 / l, l / (l - 1), 1 / (1 - l)};
}

Rational parse_rational(const std::string& s) {
  std::size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  const auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  auto end = digits(k);
  if (end == k) throw std::invalid_argument("not a rational number: '" + s + "'");
  if (end < s.size()) {
    if (s[end] != '/') throw std::invalid_argument("not a rational number: '" + s + "'");
    const auto den_end = digits(end + 1);
    if (den_end == end + 1 || den_end != s.size()) throw std::invalid_argument("not a rational number: '" + s + "'");
    const boost::multiprecision::cpp_int den(s.substr(end + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    const boost::multiprecision::cpp_int num(s.substr(s[0] == '+' ? 1 : 0, end - (s[0] == '+' ? 1 : 0)));
    return Rational(num, den);
  }
  return Rational(boost::multiprecision::cpp_int(s.substr(s[0] == '+' ? 1 : 0)));
}

}  // namespace veech
