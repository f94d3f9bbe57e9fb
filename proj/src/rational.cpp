#include "afflat/rational.hpp"

#include <cctype>

#include "afflat/errors.hpp"

namespace afflat {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidInput("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (!valid_integer_literal(s))
    throw InvalidInput("malformed integer '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-')
    throw InvalidInput("negative denominator in '" + std::string(text) + "'");
  return make_rat(num, parse_int(den_text));
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }
int sign(const Rat& r) { return sgn(r); }
int sign(const Int& z) { return sgn(z); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) ||
      !mpz_perfect_square_p(r.get_den_mpz_t()))
    return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  return make_rat(n, d);
}

Int isqrt_ceil(const Int& z) {
  if (z <= 0) return 0;
  Int s;
  mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
  if (s * s < z) s += 1;
  return s;
}

IntVec to_int_vec(const RatVec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    AFFLAT_CHECK(is_integer(x), "expected an integer vector");
    out.push_back(x.get_num());
  }
  return out;
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive_direction(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Rat scaled = x * l;
    out.push_back(scaled.get_num());
  }
  Int g = content(out);
  if (g == 0) throw InvalidInput("zero direction vector");
  for (auto& x : out) x /= g;
  return out;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace afflat
