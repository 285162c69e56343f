#include "atlas/equations.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "atlas/error.hpp"

namespace atlas {

namespace {

constexpr std::array<std::pair<RootTag, std::string_view>, 8> kRootNames{{
    {RootTag::Zero, "zero"},
    {RootTag::One, "one"},
    {RootTag::MinusOne, "minus_one"},
    {RootTag::I, "i"},
    {RootTag::MinusI, "minus_i"},
    {RootTag::OmegaCubeRoot, "omega"},
    {RootTag::OmegaSquared, "omega_squared"},
    {RootTag::Parameter, "parameter"},
}};

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string exponent_suffix(int m) { return m == 1 ? std::string{} : "^" + std::to_string(m); }

int inverse_mod(int m, int e) { return inverse_residue(m, e); }

std::complex<double> int_power(std::complex<double> z, int n) {
  std::complex<double> r{1.0, 0.0};
  for (int t = 0; t < n; ++t) r *= z;
  return r;
}

bool near(std::complex<double> a, std::complex<double> b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= 1e-12 * scale;
}

// "-z" as a signed term appended after x^n.
std::string signed_term(char sign, std::complex<double> z, bool reciprocal) {
  std::string body = format_complex(z);
  bool negative_real = z.imag() == 0.0 && z.real() < 0.0;
  if (negative_real) {
    sign = sign == '-' ? '+' : '-';
    body = format_complex(-z);
  }
  if (reciprocal && body != "1") body = "1/" + body;
  return std::string(1, sign) + body;
}

Factor linear(RootTag t, int m) {
  Factor f;
  f.kind = FactorKind::Linear;
  f.root = SymbolicRoot::of(t);
  f.multiplicity = m;
  return f;
}

std::string superelliptic_generator(int p) {
  return "(x,y) -> (x, exp(2*pi*i/" + std::to_string(p) + ")*y)";
}

void attach_rotation(SuperellipticEquation& eq, const std::vector<std::string>& names) {
  int e = eq.exponent;
  for (std::size_t t = 0; t < eq.factors.size(); ++t) {
    int m = eq.factors[t].multiplicity % e;
    if (m == 0) continue;
    eq.rotation.push_back({names[t], m, inverse_mod(m, e)});
  }
  int at_inf = static_cast<int>(((-total_degree(eq)) % e + e) % e);
  if (at_inf != 0) eq.rotation.push_back({"inf", at_inf, inverse_mod(at_inf, e)});
}

}  // namespace

std::string_view to_string(RootTag t) noexcept {
  for (const auto& [tag, name] : kRootNames)
    if (tag == t) return name;
  return "?";
}

std::optional<RootTag> parse_root_tag(std::string_view s) noexcept {
  for (const auto& [tag, name] : kRootNames)
    if (name == s) return tag;
  return std::nullopt;
}

SymbolicRoot SymbolicRoot::parameter(std::string name, std::optional<std::complex<double>> value) {
  return SymbolicRoot{RootTag::Parameter, std::move(name), value};
}

std::complex<double> SymbolicRoot::evaluate() const {
  const double third = 2.0 * std::numbers::pi / 3.0;
  switch (tag) {
    case RootTag::Zero: return {0.0, 0.0};
    case RootTag::One: return {1.0, 0.0};
    case RootTag::MinusOne: return {-1.0, 0.0};
    case RootTag::I: return {0.0, 1.0};
    case RootTag::MinusI: return {0.0, -1.0};
    case RootTag::OmegaCubeRoot: return std::polar(1.0, third);
    case RootTag::OmegaSquared: return std::polar(1.0, 2.0 * third);
    case RootTag::Parameter:
      if (!value) throw Error(ErrorCode::ParseError, "parameter root '" + name + "' has no value");
      return *value;
  }
  return {};
}

std::string SymbolicRoot::text() const {
  switch (tag) {
    case RootTag::Zero: return "0";
    case RootTag::One: return "1";
    case RootTag::MinusOne: return "-1";
    case RootTag::I: return "i";
    case RootTag::MinusI: return "-i";
    case RootTag::OmegaCubeRoot: return "w";
    case RootTag::OmegaSquared: return "w^2";
    case RootTag::Parameter:
      if (!name.empty()) return name;
      return value ? format_complex(*value) : "a";
  }
  return "?";
}

std::string format_complex(std::complex<double> z) {
  double re = z.real(), im = z.imag();
  if (im == 0.0) return format_double(re);
  std::string imag;
  if (im == 1.0) imag = "i";
  else if (im == -1.0) imag = "-i";
  else imag = format_double(im) + "i";
  if (re == 0.0) return imag;
  std::string out = "(" + format_double(re);
  if (imag.front() != '-') out += "+";
  return out + imag + ")";
}

long long total_degree(const SuperellipticEquation& eq) {
  long long sum = 0;
  for (const auto& f : eq.factors) sum += static_cast<long long>(f.degree) * f.multiplicity;
  return sum;
}

int genus_of(const SuperellipticEquation& eq) {
  const int e = eq.exponent;
  long long r = 0;
  for (const auto& f : eq.factors)
    if (f.multiplicity % e != 0) r += f.kind == FactorKind::Binomial ? f.degree : 1;
  if (total_degree(eq) % e != 0) ++r;
  return static_cast<int>((e - 1) * (r - 2) / 2);
}

bool rotation_multiplicity_check(int sigma, int m, PrimeModulus p) {
  return p.reduce(static_cast<std::int64_t>(sigma) * m) == 1;
}

SuperellipticEquation lefschetz_equation(PrimeModulus p, int k) {
  if (p.value() <= 3) throw Error(ErrorCode::UnsupportedPrime, "Lefschetz equations need p > 3");
  if (k < 1 || k > p.value() - 2)
    throw Error(ErrorCode::OutOfRange, "k must lie in 1.." + std::to_string(p.value() - 2));
  SuperellipticEquation eq;
  eq.family = "lefschetz";
  eq.exponent = p.value();
  eq.factors = {linear(RootTag::Zero, 1), linear(RootTag::One, k)};
  attach_rotation(eq, {"0", "1"});
  eq.genus = genus_of(eq);
  eq.generators = {superelliptic_generator(p.value())};
  return eq;
}

SuperellipticEquation hyperelliptic_equation(PrimeModulus p, std::complex<double> a) {
  if (a == std::complex<double>{}) throw Error(ErrorCode::ZeroParameter, "parameter a must be nonzero");
  const int n = p.value();
  std::complex<double> ap = int_power(a, n);
  if (near(ap * ap, {-1.0, 0.0}))
    throw Error(ErrorCode::DegenerateParameter, "a^(2p) = -1 gives a repeated root");

  SuperellipticEquation eq;
  eq.family = "hyperelliptic";
  eq.exponent = 2;

  Factor first;
  first.kind = FactorKind::Binomial;
  first.degree = n;
  first.constant = -ap;
  first.constant_text = signed_term('-', ap, false);
  Factor second;
  second.kind = FactorKind::Binomial;
  second.degree = n;
  second.constant = 1.0 / ap;
  second.constant_text = signed_term('+', ap, true);
  eq.factors = {first, second};

  for (const auto& f : eq.factors)
    eq.rotation.push_back({"roots of x^" + std::to_string(n) + f.constant_text, 1, 1});
  eq.genus = genus_of(eq);

  const std::string ps = std::to_string(n);
  eq.generators = {"(x,y) -> (-1/x, i*y/x^" + ps + ")", "(x,y) -> (exp(2*pi*i/" + ps + ")*x, -y)"};
  if (near(a, {1.0, 0.0}) || near(a, {-1.0, 0.0})) eq.generators.push_back("(x,y) -> (-x, y)");
  return eq;
}

SuperellipticEquation equilateral_equation(PrimeModulus p, int n, int m) {
  const int e = p.value();
  if (n < 1 || n > e - 1 || m < 1 || m > e - 1)
    throw Error(ErrorCode::InvalidExponents, "exponents must lie in 1.." + std::to_string(e - 1));
  if ((n + m + 1) % e == 0)
    throw Error(ErrorCode::InvalidExponents, "p divides n+m+1; infinity would not be a branch point");
  SuperellipticEquation eq;
  eq.family = "equilateral";
  eq.exponent = e;
  eq.factors = {linear(RootTag::One, 1), linear(RootTag::OmegaCubeRoot, n), linear(RootTag::OmegaSquared, m)};
  attach_rotation(eq, {"1", "w", "w^2"});
  eq.genus = genus_of(eq);
  eq.generators = {superelliptic_generator(e)};
  return eq;
}

SuperellipticEquation square_equation(PrimeModulus p, int a, int b) {
  const int e = p.value();
  if (a < 1 || a > e - 1 || b < 1 || b > e - 1)
    throw Error(ErrorCode::InvalidExponents, "exponents must lie in 1.." + std::to_string(e - 1));
  int c = p.reduce(2 * e - 1 - a - b);
  if (c == 0) throw Error(ErrorCode::InvalidExponents, "c = 2p-1-a-b reduces to 0");
  SuperellipticEquation eq;
  eq.family = "square";
  eq.exponent = e;
  eq.factors = {linear(RootTag::One, 1), linear(RootTag::I, a), linear(RootTag::MinusOne, c),
                linear(RootTag::MinusI, b)};
  attach_rotation(eq, {"1", "i", "-1", "-i"});
  eq.genus = genus_of(eq);
  eq.generators = {superelliptic_generator(e)};
  return eq;
}

namespace {

struct Slot {
  std::optional<RootTag> tag;
  std::string base;
  int mult = 1;
  bool bare = false;  // a lone "x"
  bool alive = true;
  const Factor* binomial = nullptr;
};

std::string linear_base(const SymbolicRoot& r) {
  switch (r.tag) {
    case RootTag::Zero: return "x";
    case RootTag::MinusOne: return "x+1";
    case RootTag::MinusI: return "x+i";
    default: break;
  }
  std::string t = r.text();
  if (r.tag == RootTag::Parameter && !t.empty() && t.front() == '-') return "x+" + t.substr(1);
  return "x-" + t;
}

int find_slot(const std::vector<Slot>& slots, RootTag t) {
  for (std::size_t s = 0; s < slots.size(); ++s)
    if (slots[s].alive && slots[s].tag == t) return static_cast<int>(s);
  return -1;
}

// Merges slots u and v (equal multiplicity) into the earlier one.
void merge(std::vector<Slot>& slots, int u, int v, std::string base) {
  int keep = std::min(u, v), drop = std::max(u, v);
  slots[keep].tag.reset();
  slots[keep].base = std::move(base);
  slots[keep].bare = false;
  slots[keep].binomial = nullptr;
  slots[drop].alive = false;
}

void merge_pair(std::vector<Slot>& slots, RootTag a, RootTag b, const std::string& base) {
  int u = find_slot(slots, a), v = find_slot(slots, b);
  if (u >= 0 && v >= 0 && slots[u].mult == slots[v].mult) merge(slots, u, v, base);
}

}  // namespace

std::string render(const SuperellipticEquation& eq, Notation notation) {
  std::vector<Slot> slots;
  for (const auto& f : eq.factors) {
    Slot s;
    s.mult = f.multiplicity;
    if (f.kind == FactorKind::Linear) {
      s.tag = f.root.tag;
      s.base = linear_base(f.root);
      s.bare = f.root.tag == RootTag::Zero;
    } else {
      s.base = "x^" + std::to_string(f.degree) + f.constant_text;
      s.binomial = &f;
    }
    slots.push_back(std::move(s));
  }

  int w = find_slot(slots, RootTag::OmegaCubeRoot), w2 = find_slot(slots, RootTag::OmegaSquared);
  if (w >= 0 && w2 >= 0 && slots[w].mult == slots[w2].mult) {
    merge(slots, w, w2, "x^2+x+1");
    int merged = std::min(w, w2), one = find_slot(slots, RootTag::One);
    if (one >= 0 && slots[one].mult == slots[merged].mult) merge(slots, one, merged, "x^3-1");
  }
  merge_pair(slots, RootTag::I, RootTag::MinusI, "x^2+1");
  merge_pair(slots, RootTag::One, RootTag::MinusOne, "x^2-1");

  // (x^n - s)(x^n + s) with s = +-1.
  for (std::size_t u = 0; u < slots.size(); ++u) {
    for (std::size_t v = u + 1; v < slots.size(); ++v) {
      const Factor* f = slots[u].binomial;
      const Factor* g = slots[v].binomial;
      if (!f || !g || !slots[u].alive || !slots[v].alive) continue;
      if (f->degree != g->degree || slots[u].mult != slots[v].mult) continue;
      if (near(f->constant, -g->constant) && near(f->constant * g->constant, {-1.0, 0.0}))
        merge(slots, static_cast<int>(u), static_cast<int>(v), "x^" + std::to_string(2 * f->degree) + "-1");
    }
  }

  std::vector<const Slot*> alive;
  for (const auto& s : slots)
    if (s.alive) alive.push_back(&s);

  std::string rhs;
  if (alive.size() == 1 && alive.front()->mult == 1) {
    rhs = alive.front()->base;
  } else {
    for (const Slot* s : alive) {
      if (s->bare) rhs += s->base;
      else rhs += "(" + s->base + ")";
      rhs += exponent_suffix(s->mult);
    }
  }
  std::string out = "y^" + std::to_string(eq.exponent) + "=" + rhs;
  return notation == Notation::Ascii ? out : to_unicode(out);
}

std::string to_unicode(std::string_view ascii) {
  static constexpr std::array<std::string_view, 10> kSup{"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (std::size_t t = 0; t < ascii.size(); ++t) {
    char c = ascii[t];
    if (c == '^' && t + 1 < ascii.size() && ascii[t + 1] >= '0' && ascii[t + 1] <= '9') {
      while (t + 1 < ascii.size() && ascii[t + 1] >= '0' && ascii[t + 1] <= '9') out += kSup[ascii[++t] - '0'];
    } else if (c == '-') {
      out += "−";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace atlas
