#include "hklab/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hklab {

namespace {

const char* const kVarNames[5] = {"x", "y", "z", "u", "v"};

std::string var_name(unsigned i, unsigned nvars) {
  if (nvars <= 5) return kVarNames[i];
  return "x" + std::to_string(i + 1);
}

unsigned shift_of(unsigned var, unsigned nvars) { return 8 * (nvars - 1 - var); }

void require_vars(unsigned nvars) {
  if (nvars == 0 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

MonoKey mono_pack(const std::vector<unsigned>& exps, unsigned nvars) {
  require_vars(nvars);
  if (exps.size() != nvars) throw std::invalid_argument("exponent count mismatch");
  MonoKey key = 0;
  for (unsigned i = 0; i < nvars; ++i) {
    if (exps[i] > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 255");
    key |= MonoKey(exps[i]) << shift_of(i, nvars);
  }
  return key;
}

std::vector<unsigned> mono_unpack(MonoKey key, unsigned nvars) {
  require_vars(nvars);
  std::vector<unsigned> exps(nvars);
  for (unsigned i = 0; i < nvars; ++i) exps[i] = unsigned(key >> shift_of(i, nvars)) & 0xff;
  return exps;
}

unsigned mono_degree(MonoKey key, unsigned nvars) {
  unsigned d = 0;
  for (unsigned i = 0; i < nvars; ++i) d += unsigned(key >> shift_of(i, nvars)) & 0xff;
  return d;
}

unsigned mono_weighted_degree(MonoKey key, const std::vector<unsigned>& weights) {
  unsigned nvars = unsigned(weights.size());
  unsigned d = 0;
  for (unsigned i = 0; i < nvars; ++i)
    d += weights[i] * (unsigned(key >> shift_of(i, nvars)) & 0xff);
  return d;
}

Box::Box(unsigned n_, unsigned nvars_) : n(n_), nvars(nvars_) {
  require_vars(nvars_);
  if (n_ > 8) throw std::invalid_argument("box side exceeds the packed-monomial range");
}

std::uint64_t Box::volume() const {
  if (n * nvars > 62) throw std::overflow_error("box too large to index");
  return std::uint64_t(1) << (n * nvars);
}

bool Box::contains(MonoKey key) const {
  std::uint64_t q = side();
  for (unsigned i = 0; i < nvars; ++i)
    if (((key >> shift_of(i, nvars)) & 0xff) >= q) return false;
  return true;
}

MultiPoly::MultiPoly(FieldContextPtr ctx, unsigned nvars) : ctx_(std::move(ctx)), nvars_(nvars) {
  require_vars(nvars);
  if (!ctx_) throw std::invalid_argument("polynomial needs a field context");
}

FieldElement MultiPoly::coeff(MonoKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? ctx_->zero() : it->second;
}

void MultiPoly::add_term(MonoKey key, const FieldElement& c) {
  if (c.context() != ctx_) throw std::invalid_argument("field context mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::add_term(const std::vector<unsigned>& exps, const FieldElement& c) {
  add_term(mono_pack(exps, nvars_), c);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (ctx_ != o.ctx_ || nvars_ != o.nvars_)
    throw std::invalid_argument("polynomial shape mismatch");
  MultiPoly out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k, c);
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return ctx_ == o.ctx_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

MultiPoly one_poly(const FieldContextPtr& ctx, unsigned nvars) {
  MultiPoly p(ctx, nvars);
  p.add_term(MonoKey(0), ctx->one());
  return p;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const std::optional<Box>& box) {
  if (a.context() != b.context() || a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial shape mismatch");
  unsigned nvars = a.nvars();
  if (box && box->nvars != nvars) throw std::invalid_argument("box shape mismatch");
  const unsigned limit = box ? unsigned(box->side()) : kMaxExponent + 1;

  std::vector<std::pair<std::vector<unsigned>, FieldElement>> bt;
  bt.reserve(b.term_count());
  for (const auto& [k, c] : b.terms()) bt.emplace_back(mono_unpack(k, nvars), c);

  MultiPoly out(a.context(), nvars);
  std::vector<unsigned> sum(nvars);
  for (const auto& [ka, ca] : a.terms()) {
    auto ea = mono_unpack(ka, nvars);
    for (const auto& [eb, cb] : bt) {
      bool keep = true;
      for (unsigned v = 0; v < nvars; ++v) {
        sum[v] = ea[v] + eb[v];
        if (sum[v] >= limit) {
          keep = false;
          break;
        }
      }
      if (!keep) {
        if (!box) throw std::overflow_error("monomial exponent exceeds 255");
        continue;
      }
      out.add_term(mono_pack(sum, nvars), ca * cb);
    }
  }
  return out;
}

MultiPoly square(const MultiPoly& a, const std::optional<Box>& box) {
  unsigned nvars = a.nvars();
  if (box && box->nvars != nvars) throw std::invalid_argument("box shape mismatch");
  const unsigned limit = box ? unsigned(box->side()) : kMaxExponent + 1;
  MultiPoly out(a.context(), nvars);
  std::vector<unsigned> dbl(nvars);
  for (const auto& [k, c] : a.terms()) {
    auto e = mono_unpack(k, nvars);
    bool keep = true;
    for (unsigned v = 0; v < nvars; ++v) {
      dbl[v] = 2 * e[v];
      if (dbl[v] >= limit) {
        keep = false;
        break;
      }
    }
    if (!keep) {
      if (!box) throw std::overflow_error("monomial exponent exceeds 255");
      continue;
    }
    out.add_term(mono_pack(dbl, nvars), c.frobenius());
  }
  return out;
}

MultiPoly truncate_to_box(const MultiPoly& p, const Box& box) {
  if (box.nvars != p.nvars()) throw std::invalid_argument("box shape mismatch");
  MultiPoly out(p.context(), p.nvars());
  for (const auto& [k, c] : p.terms())
    if (box.contains(k)) out.add_term(k, c);
  return out;
}

MultiPoly power_mod_box(const MultiPoly& p, std::uint64_t j, const Box& box) {
  if (j == 0) return one_poly(p.context(), p.nvars());
  MultiPoly base = truncate_to_box(p, box);
  int top = 63 - std::countl_zero(j);
  MultiPoly acc = base;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = square(acc, box);
    if ((j >> bit) & 1) acc = multiply(acc, base, box);
  }
  return acc;
}

MultiPoly quartic(const FieldElement& alpha) {
  const auto& ctx = alpha.context();
  if (!ctx) throw std::invalid_argument("detached field element");
  if (alpha.is_zero()) throw std::invalid_argument("the quartic family needs a nonzero scalar");
  MultiPoly p(ctx, 3);
  p.add_term({2, 2, 0}, alpha);
  p.add_term({0, 0, 4}, ctx->one());
  p.add_term({1, 1, 2}, ctx->one());
  p.add_term({3, 0, 1}, ctx->one());
  p.add_term({0, 3, 1}, ctx->one());
  return p;
}

MultiPoly smoothed_surface(const FieldElement& alpha) {
  const auto& ctx = alpha.context();
  if (!ctx) throw std::invalid_argument("detached field element");
  if (alpha.is_zero()) throw std::invalid_argument("the quartic family needs a nonzero scalar");
  MultiPoly p(ctx, 5);
  p.add_term({0, 0, 0, 1, 1}, ctx->one());
  p.add_term({2, 2, 0, 0, 0}, alpha);
  p.add_term({0, 0, 4, 0, 0}, ctx->one());
  p.add_term({1, 1, 2, 0, 0}, ctx->one());
  p.add_term({3, 0, 1, 0, 0}, ctx->one());
  p.add_term({0, 3, 1, 0, 0}, ctx->one());
  return p;
}

std::vector<unsigned> standard_weights(unsigned nvars) {
  if (nvars == 3) return {1, 1, 1};
  if (nvars == 5) return {1, 1, 1, 2, 2};
  throw std::invalid_argument("no standard weights for this variable count");
}

MultiPoly compress_coefficients(const MultiPoly& p) {
  unsigned m = 1;
  for (const auto& [k, c] : p.terms()) m = unsigned(std::lcm(m, element_degree(c)));
  if (m == p.context()->degree()) return p;
  SubfieldProjection proj(p.context(), m);
  MultiPoly out(proj.target(), p.nvars());
  for (const auto& [k, c] : p.terms()) out.add_term(k, proj.apply(c));
  return out;
}

std::optional<unsigned> homogeneous_degree(const MultiPoly& p,
                                           const std::vector<unsigned>& weights) {
  if (weights.size() != p.nvars()) throw std::invalid_argument("weight count mismatch");
  if (p.is_zero()) return 0;
  std::optional<unsigned> deg;
  for (const auto& [k, c] : p.terms()) {
    unsigned d = mono_weighted_degree(k, weights);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

namespace {

std::string hex_of(const FieldElement& e) {
  std::string s = to_string(e);  // gf2^N:0x..
  return s.substr(s.find(':') + 1);
}

}  // namespace

std::string to_string(const MultiPoly& p) {
  std::ostringstream os;
  os << "gf2^" << p.context()->degree() << "[";
  for (unsigned i = 0; i < p.nvars(); ++i) {
    if (i) os << ",";
    os << var_name(i, p.nvars());
  }
  os << "]: ";
  if (p.is_zero()) {
    os << "0";
    return os.str();
  }
  std::vector<std::pair<MonoKey, FieldElement>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    unsigned da = mono_degree(a.first, p.nvars()), db = mono_degree(b.first, p.nvars());
    if (da != db) return da > db;
    return a.first > b.first;
  });
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one();
    bool constant = (k == 0);
    if (!unit || constant) os << hex_of(c);
    if (!constant) {
      if (!unit) os << "*";
      auto exps = mono_unpack(k, p.nvars());
      bool leading = true;
      for (unsigned v = 0; v < p.nvars(); ++v) {
        if (!exps[v]) continue;
        if (!leading) os << "*";
        leading = false;
        os << var_name(v, p.nvars());
        if (exps[v] > 1) os << "^" << exps[v];
      }
    }
  }
  return os.str();
}

MultiPoly parse_poly(const std::string& s) {
  std::size_t lb = s.find('['), rb = s.find(']');
  if (s.rfind("gf2^", 0) != 0 || lb == std::string::npos || rb == std::string::npos || rb < lb)
    throw std::invalid_argument("expected gf2^N[vars]: polynomial literal");
  std::size_t colon = s.find(':', rb);
  if (colon == std::string::npos) throw std::invalid_argument("expected ':' in polynomial literal");

  std::string dstr = s.substr(4, lb - 4);
  if (dstr.empty() || dstr.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad field degree in polynomial literal");
  unsigned degree = unsigned(std::stoul(dstr));
  auto ctx = FieldContext::get(degree);

  std::vector<std::string> names;
  for (auto& n : split(s.substr(lb + 1, rb - lb - 1), ',')) {
    std::string t = strip(n);
    if (t.empty()) throw std::invalid_argument("empty variable name");
    names.push_back(t);
  }
  unsigned nvars = unsigned(names.size());
  require_vars(nvars);

  MultiPoly p(ctx, nvars);
  std::string body = strip(s.substr(colon + 1));
  if (body == "0") return p;
  for (auto& term : split(body, '+')) {
    std::string t = strip(term);
    if (t.empty()) throw std::invalid_argument("empty term in polynomial literal");
    FieldElement c = ctx->one();
    std::vector<unsigned> exps(nvars, 0);
    for (auto& factor : split(t, '*')) {
      std::string f = strip(factor);
      if (f.rfind("0x", 0) == 0 || f.rfind("0X", 0) == 0) {
        c *= parse_element("gf2^" + std::to_string(degree) + ":" + f);
        continue;
      }
      std::string name = f;
      unsigned e = 1;
      if (std::size_t caret = f.find('^'); caret != std::string::npos) {
        name = strip(f.substr(0, caret));
        std::string es = strip(f.substr(caret + 1));
        if (es.empty() || es.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("bad exponent in polynomial literal");
        unsigned long v = std::stoul(es);
        if (v > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 255");
        e = unsigned(v);
      }
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end())
        throw std::invalid_argument("unknown variable '" + name + "' in polynomial literal");
      exps[unsigned(it - names.begin())] += e;
      if (exps[unsigned(it - names.begin())] > kMaxExponent)
        throw std::overflow_error("monomial exponent exceeds 255");
    }
    p.add_term(exps, c);
  }
  return p;
}

}  // namespace hklab
