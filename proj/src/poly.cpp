#include "hgpd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <utility>

namespace hgpd {

std::string VarId::name() const {
  switch (kind) {
    case VarKind::A: return "A";
    case VarKind::B: return "B";
    case VarKind::X: return "x" + std::to_string(index);
    case VarKind::Y: return "y" + std::to_string(index);
  }
  return "?";
}

Context::Context(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw std::invalid_argument("context dimensions must be nonnegative");
  if (2 + m + n > kMaxVars) {
    throw std::invalid_argument("context (" + std::to_string(m) + "," + std::to_string(n) +
                                ") exceeds " + std::to_string(kMaxVars) + " variables");
  }
}

bool Context::contains(VarId v) const {
  switch (v.kind) {
    case VarKind::A:
    case VarKind::B: return true;
    case VarKind::X: return v.index >= 1 && v.index <= m_;
    case VarKind::Y: return v.index >= 1 && v.index <= n_;
  }
  return false;
}

int Context::slot(VarId v) const {
  if (!contains(v)) {
    throw std::out_of_range("variable " + v.name() + " not in context (" + std::to_string(m_) +
                            "," + std::to_string(n_) + ")");
  }
  switch (v.kind) {
    case VarKind::A: return 0;
    case VarKind::B: return 1;
    case VarKind::X: return 1 + v.index;
    case VarKind::Y: return 1 + m_ + v.index;
  }
  return -1;
}

VarId Context::var_at(int slot) const {
  if (slot == 0) return VarId::a();
  if (slot == 1) return VarId::b();
  if (slot >= 2 && slot < 2 + m_) return VarId::x(slot - 1);
  if (slot >= 2 + m_ && slot < num_vars()) return VarId::y(slot - 1 - m_);
  throw std::out_of_range("slot " + std::to_string(slot) + " out of range");
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::power(int slot, int exp) {
  if (slot < 0 || slot >= Context::kMaxVars) throw std::out_of_range("monomial slot");
  if (exp < 0 || exp > kMaxDegree) throw std::overflow_error("exponent exceeds monomial capacity");
  Monomial r;
  r.key_ = (Key(exp) << kDegreeShift) | (Key(exp) << shift_of(slot));
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree() > other.degree()) return false;
  for (int s = 0; s < Context::kMaxVars; ++s) {
    if (exponent(s) > other.exponent(s)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree() + other.degree() > kMaxDegree) {
    throw std::overflow_error("total degree exceeds " + std::to_string(kMaxDegree));
  }
  Monomial r;
  r.key_ = key_ + other.key_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw std::domain_error("monomial does not divide");
  Monomial r;
  r.key_ = key_ - other.key_;
  return r;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

// -------------------------------------------------------------- Polynomial

struct PolyAccess {
  static std::vector<Term>& terms(Polynomial& p) { return p.terms_; }

  static Polynomial make(Context ctx, std::vector<Term>&& sorted) {
    Polynomial p(ctx);
    p.terms_ = std::move(sorted);
    return p;
  }

  // a + sign*b for descending sequences.
  static std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].mono > b[j].mono) {
        out.push_back(a[i++]);
      } else if (b[j].mono > a[i].mono) {
        out.push_back(negate_b ? Term{b[j].mono, -b[j].coef} : b[j]);
        ++j;
      } else {
        Integer c = a[i].coef;
        if (negate_b) c -= b[j].coef; else c += b[j].coef;
        if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(negate_b ? Term{b[j].mono, -b[j].coef} : b[j]);
    return out;
  }

  static std::vector<Term> shifted(std::span<const Term> f, const Term& t) {
    std::vector<Term> out;
    out.reserve(f.size());
    if (t.coef.is_one()) {
      for (const Term& s : f) out.push_back({s.mono * t.mono, s.coef});
    } else {
      for (const Term& s : f) out.push_back({s.mono * t.mono, s.coef * t.coef});
    }
    return out;
  }

  // Product of a descending f with a short g, by merging |g| shifted copies.
  static std::vector<Term> multiply(std::span<const Term> f, std::span<const Term> g) {
    constexpr std::size_t kBlock = 16;
    std::vector<Term> acc;
    for (std::size_t start = 0; start < g.size(); start += kBlock) {
      std::size_t end = std::min(g.size(), start + kBlock);
      std::vector<std::vector<Term>> parts;
      parts.reserve(end - start);
      for (std::size_t k = start; k < end; ++k) parts.push_back(shifted(f, g[k]));
      while (parts.size() > 1) {
        std::vector<std::vector<Term>> next;
        next.reserve((parts.size() + 1) / 2);
        for (std::size_t k = 0; k + 1 < parts.size(); k += 2) {
          next.push_back(merge(parts[k], parts[k + 1], false));
        }
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
      }
      acc = acc.empty() ? std::move(parts.front()) : merge(acc, parts.front(), false);
    }
    return acc;
  }
};

namespace {

void require_same_context(const Polynomial& f, const Polynomial& g) {
  if (!(f.context() == g.context())) {
    throw std::invalid_argument("polynomial context mismatch: (" + std::to_string(f.context().m()) +
                                "," + std::to_string(f.context().n()) + ") vs (" +
                                std::to_string(g.context().m()) + "," +
                                std::to_string(g.context().n()) + ")");
  }
}

}  // namespace

Polynomial Polynomial::constant(Context ctx, const Integer& c) {
  Polynomial p(ctx);
  if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
  return p;
}

Polynomial Polynomial::var(Context ctx, VarId v) {
  Polynomial p(ctx);
  p.terms_.push_back({Monomial::power(ctx.slot(v), 1), Integer(1)});
  return p;
}

Polynomial Polynomial::from_terms(Context ctx, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return PolyAccess::make(ctx, std::move(out));
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().mono.degree();
}

int Polynomial::degree_in(VarId v) const {
  int s = ctx_.slot(v);
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.exponent(s));
  return d;
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, 1);
  for (unsigned k = 0; k < e; ++k) result *= *this;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_context(*this, g);
  if (g.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = g.terms_;
    return *this;
  }
  terms_ = PolyAccess::merge(terms_, g.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  require_same_context(*this, g);
  if (g.terms_.empty()) return *this;
  terms_ = PolyAccess::merge(terms_, g.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coef});
  return r;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r += g;
  return r;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  Polynomial r = f;
  r -= g;
  return r;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.context());
  const Polynomial& big = f.size() >= g.size() ? f : g;
  const Polynomial& small = f.size() >= g.size() ? g : f;
  return PolyAccess::make(f.context(), PolyAccess::multiply(big.terms_, small.terms_));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!(f.ctx_ == g.ctx_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t k = 0; k < f.terms_.size(); ++k) {
    if (!(f.terms_[k].mono == g.terms_[k].mono) || !(f.terms_[k].coef == g.terms_[k].coef)) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::scaled(const Monomial& mono, const Integer& c) const {
  if (c.is_zero()) return Polynomial(ctx_);
  return PolyAccess::make(ctx_, PolyAccess::shifted(terms_, Term{mono, c}));
}

Polynomial linear(Context ctx, std::initializer_list<std::pair<int, VarId>> parts,
                  std::int64_t constant) {
  std::vector<Term> terms;
  for (const auto& [c, v] : parts) terms.push_back({Monomial::power(ctx.slot(v), 1), Integer(c)});
  if (constant != 0) terms.push_back({Monomial(), Integer(constant)});
  return Polynomial::from_terms(ctx, std::move(terms));
}

Polynomial sum_of_products(Context ctx,
                           std::span<const std::pair<const Polynomial*, const Polynomial*>> pairs) {
  struct Stream {
    const Term* cur;
    const Term* end;
    Monomial shift;
    const Integer* coef;
    Monomial head;
  };
  std::vector<Stream> streams;
  std::size_t bound = 0;
  int top_degree = 0;
  for (const auto& [f, g] : pairs) {
    require_same_context(*f, Polynomial(ctx));
    require_same_context(*g, Polynomial(ctx));
    if (f->is_zero()) continue;
    for (const Term& t : g->terms()) {
      top_degree = std::max(top_degree, f->total_degree() + t.mono.degree());
      streams.push_back({f->terms().data(), f->terms().data() + f->size(), t.mono, &t.coef, {}});
      bound += f->size();
    }
  }
  if (top_degree > Monomial::kMaxDegree) {
    throw std::overflow_error("total degree exceeds " + std::to_string(Monomial::kMaxDegree));
  }
  for (Stream& st : streams) st.head = st.cur->mono.times_unchecked(st.shift);

  std::vector<Term> out;
  out.reserve(bound);
  std::size_t live = streams.size();
  while (live) {
    // Largest head among the live streams.
    std::size_t best = 0;
    for (std::size_t k = 1; k < live; ++k) {
      if (streams[k].head > streams[best].head) best = k;
    }
    Monomial mono = streams[best].head;
    Integer acc;
    for (std::size_t k = 0; k < live;) {
      Stream& st = streams[k];
      if (!(st.head == mono)) {
        ++k;
        continue;
      }
      if (st.coef->is_one()) acc += st.cur->coef;
      else acc += st.cur->coef * *st.coef;
      if (++st.cur == st.end) {
        st = streams[--live];
        continue;
      }
      st.head = st.cur->mono.times_unchecked(st.shift);
      ++k;
    }
    if (!acc.is_zero()) out.push_back({mono, std::move(acc)});
  }
  return PolyAccess::make(ctx, std::move(out));
}

// ------------------------------------------------------- operator algebra

Polynomial relabel(const Polynomial& f, std::span<const SignedSlot> images, Context target) {
  const Context& ctx = f.context();
  if (static_cast<int>(images.size()) != ctx.num_vars()) {
    throw std::invalid_argument("relabel: need one image per variable");
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial mono;
    int negations = 0;
    for (int s = 0; s < ctx.num_vars(); ++s) {
      int e = t.mono.exponent(s);
      if (e == 0) continue;
      mono = mono * Monomial::power(images[s].slot, e);
      if (images[s].sign < 0) negations += e;
    }
    out.push_back({mono, (negations % 2) ? -t.coef : t.coef});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial swap_x(const Polynomial& f, int i) {
  const Context& ctx = f.context();
  if (i < 1 || i >= ctx.m()) {
    throw std::out_of_range("swap_x: index " + std::to_string(i) + " outside 1.." +
                            std::to_string(ctx.m() - 1));
  }
  std::vector<SignedSlot> images;
  for (int s = 0; s < ctx.num_vars(); ++s) images.push_back({s, 1});
  std::swap(images[ctx.slot(VarId::x(i))], images[ctx.slot(VarId::x(i + 1))]);
  return relabel(f, images, ctx);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (g.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (f.is_zero()) return Polynomial(f.context());

  const Term& lead = g.terms().front();
  std::map<Monomial, Integer, std::greater<>> rem;
  for (const Term& t : f.terms()) rem.emplace(t.mono, t.coef);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.mono.divides(top->first)) throw NotDivisible("divide_exact: nonzero remainder");
    Integer qc;
    if (!top->second.divides_into(lead.coef, qc)) {
      throw NotDivisible("divide_exact: coefficient not divisible");
    }
    Monomial qm = top->first / lead.mono;
    for (const Term& gt : g.terms()) {
      Monomial key = qm * gt.mono;
      Integer delta = qc * gt.coef;
      auto it = rem.find(key);
      if (it == rem.end()) {
        rem.emplace(key, -delta);
      } else {
        it->second -= delta;
        if (it->second.is_zero()) rem.erase(it);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  Polynomial q = Polynomial::from_terms(f.context(), std::move(quotient));
  if (!(q * g == f)) throw std::logic_error("divide_exact: re-multiplication check failed");
  return q;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  Polynomial numerator = f - swap_x(f, i);
  const Context& ctx = f.context();
  Polynomial d = linear(ctx, {{1, VarId::x(i)}, {-1, VarId::x(i + 1)}});
  return divide_exact(numerator, d);
}

LeadingForm leading_form(const Polynomial& f, VarId v) {
  if (f.is_zero()) throw std::invalid_argument("leading_form of the zero polynomial");
  int s = f.context().slot(v);
  int deg = f.degree_in(v);
  Monomial vd = Monomial::power(s, deg);
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    if (t.mono.exponent(s) == deg) out.push_back({t.mono / vd, t.coef});
  }
  return {deg, Polynomial::from_terms(f.context(), std::move(out))};
}

Integer evaluate(const Polynomial& f, std::span<const Integer> point) {
  const Context& ctx = f.context();
  if (static_cast<int>(point.size()) != ctx.num_vars()) {
    throw std::invalid_argument("evaluate: point has wrong dimension");
  }
  int maxdeg = std::max(0, f.total_degree());
  std::vector<std::vector<Integer>> powers(ctx.num_vars());
  for (int s = 0; s < ctx.num_vars(); ++s) {
    powers[s].push_back(Integer(1));
    for (int e = 1; e <= maxdeg; ++e) powers[s].push_back(powers[s].back() * point[s]);
  }
  Integer sum;
  for (const Term& t : f.terms()) {
    Integer v = t.coef;
    for (int s = 0; s < ctx.num_vars(); ++s) {
      int e = t.mono.exponent(s);
      if (e) v *= powers[s][e];
    }
    sum += v;
  }
  return sum;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  const Context& ctx = f.context();
  if (static_cast<int>(images.size()) != ctx.num_vars() || images.empty()) {
    throw std::invalid_argument("substitute: need one image per variable");
  }
  Context target = images.front().context();
  for (const Polynomial& p : images) {
    if (!(p.context() == target)) throw std::invalid_argument("substitute: image contexts differ");
  }
  int maxdeg = std::max(0, f.total_degree());
  std::vector<std::vector<Polynomial>> powers(ctx.num_vars());
  for (int s = 0; s < ctx.num_vars(); ++s) {
    powers[s].push_back(Polynomial::constant(target, 1));
    for (int e = 1; e <= maxdeg; ++e) powers[s].push_back(powers[s].back() * images[s]);
  }
  std::vector<Term> pieces;
  for (const Term& t : f.terms()) {
    Polynomial v = Polynomial::constant(target, t.coef);
    for (int s = 0; s < ctx.num_vars(); ++s) {
      int e = t.mono.exponent(s);
      if (e) v *= powers[s][e];
    }
    pieces.insert(pieces.end(), v.terms().begin(), v.terms().end());
  }
  return Polynomial::from_terms(target, std::move(pieces));
}

Polynomial with_context(const Polynomial& f, Context target) {
  const Context& ctx = f.context();
  std::vector<SignedSlot> images;
  for (int s = 0; s < ctx.num_vars(); ++s) {
    VarId v = ctx.var_at(s);
    bool used = false;
    for (const Term& t : f.terms()) used = used || t.mono.exponent(s) > 0;
    if (!target.contains(v)) {
      if (used) throw std::invalid_argument("with_context: " + v.name() + " missing from target");
      images.push_back({0, 1});
    } else {
      images.push_back({target.slot(v), 1});
    }
  }
  return relabel(f, images, target);
}

// ------------------------------------------------------------ text format

std::string format(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Context& ctx = f.context();
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    bool negative = t.coef.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (int s = 0; s < ctx.num_vars(); ++s) {
      int e = t.mono.exponent(s);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.var_at(s).name();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Integer mag = t.coef.abs();
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Context ctx) : text_(text), ctx_(ctx) {}

  Polynomial run() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ctx_);
    bool negate = false;
    if (peek('-') || peek('+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_] == '-';
      ++pos_;
      Polynomial next = term();
      if (minus) acc -= next; else acc += next;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek('*')) {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", at);
      if (digits.size() > 3) throw ParseError("exponent too large", at);
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial::constant(ctx_, Integer::from_string(read_digits()));
    }
    if (c == 'A' || c == 'B') {
      ++pos_;
      return Polynomial::var(ctx_, c == 'A' ? VarId::a() : VarId::b());
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      std::string digits = read_digits();
      if (digits.empty() || digits.size() > 3) throw ParseError("expected variable index", pos_);
      int k = std::stoi(digits);
      VarId v = c == 'x' ? VarId::x(k) : VarId::y(k);
      if (!ctx_.contains(v)) throw ParseError("variable " + v.name() + " outside context", at);
      return Polynomial::var(ctx_, v);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", at);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  Context ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, Context ctx) { return Parser(text, ctx).run(); }

}  // namespace hgpd
