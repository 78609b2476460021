#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "asdim/error.hpp"
#include "asdim/groups.hpp"

namespace asdim {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::kBudgetExhausted, "group-overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::kBudgetExhausted, "group-overflow");
  return r;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

std::string power(const std::string& letter, std::int64_t e) {
  return e == 1 ? letter : letter + "^" + std::to_string(e);
}

std::string letter_name(std::size_t i) {
  static const std::string names = "abcdefghijklmnopqrs";
  return i < names.size() ? std::string(1, names[i]) : "x" + std::to_string(i);
}

// ---- Z^n and Z with arbitrary generating vectors -------------------------

class AbelianLattice final : public GroupModel {
 public:
  AbelianLattice(std::string name, std::size_t dim, std::vector<std::vector<std::int64_t>> gens,
                 std::optional<std::int64_t> interval_top)
      : name_(std::move(name)), dim_(dim), gens_(std::move(gens)), interval_top_(interval_top) {}

  std::string name() const override { return name_; }
  std::size_t generator_count() const override { return 2 * gens_.size(); }
  std::string generator_name(Letter s) const override {
    std::ostringstream out;
    out << (s % 2 ? "-" : "+") << "(";
    for (std::size_t i = 0; i < dim_; ++i) out << (i ? "," : "") << gens_[s / 2][i];
    out << ")";
    return out.str();
  }
  Letter inverse_letter(Letter s) const override { return s ^ 1U; }
  Element identity() const override { return Element(dim_, 0); }
  Element multiply(const Element& g, Letter s) const override {
    Element r = g;
    const std::int64_t sign = s % 2 ? -1 : 1;
    for (std::size_t i = 0; i < dim_; ++i) r[i] += sign * gens_[s / 2][i];
    return r;
  }
  Element product(const Element& g, const Element& h) const override {
    Element r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = checked_add(g[i], h[i]);
    return r;
  }
  Element inverse(const Element& g) const override {
    Element r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = -g[i];
    return r;
  }
  std::string format(const Element& g) const override {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < dim_; ++i) out << (i ? "," : "") << g[i];
    out << ")";
    return out.str();
  }
  std::optional<std::int64_t> word_length(const Element& g) const override {
    if (interval_top_) {
      const std::int64_t x = std::abs(g[0]);
      return (x + *interval_top_ - 1) / *interval_top_;
    }
    if (!standard_) return std::nullopt;
    std::int64_t len = 0;
    for (auto v : g) len += std::abs(v);
    return len;
  }
  std::optional<std::vector<std::int64_t>> coordinates(const Element& g) const override {
    if (!standard_) return std::nullopt;
    return g;
  }
  bool is_free() const override { return standard_ && dim_ <= 1; }

  void mark_standard() { standard_ = true; }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::vector<std::int64_t>> gens_;
  std::optional<std::int64_t> interval_top_;  // generators exactly 1..top
  bool standard_ = false;
};

// ---- symmetric group, adjacent transpositions ---------------------------

class SymmetricGroup final : public GroupModel {
 public:
  SymmetricGroup(std::string name, std::size_t n) : name_(std::move(name)), n_(n) {}

  std::string name() const override { return name_; }
  std::size_t generator_count() const override { return n_ > 0 ? n_ - 1 : 0; }
  std::string generator_name(Letter s) const override {
    return "(" + std::to_string(s) + " " + std::to_string(s + 1) + ")";
  }
  Letter inverse_letter(Letter s) const override { return s; }
  Element identity() const override {
    Element e(n_);
    std::iota(e.begin(), e.end(), 0);
    return e;
  }
  Element multiply(const Element& g, Letter s) const override {
    Element r = g;
    std::swap(r[s], r[s + 1]);
    return r;
  }
  Element product(const Element& g, const Element& h) const override {
    Element r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = g[static_cast<std::size_t>(h[i])];
    return r;
  }
  Element inverse(const Element& g) const override {
    Element r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[static_cast<std::size_t>(g[i])] = static_cast<std::int64_t>(i);
    return r;
  }
  std::string format(const Element& g) const override {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < n_; ++i) out << (i ? " " : "") << g[i];
    out << "]";
    return out.str();
  }
  std::optional<std::int64_t> word_length(const Element& g) const override {
    std::int64_t inv = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (g[i] > g[j]) ++inv;
    return inv;
  }

 private:
  std::string name_;
  std::size_t n_;
};

// ---- direct product ------------------------------------------------------

class DirectProduct final : public GroupModel {
 public:
  DirectProduct(std::string name, GroupPtr a, GroupPtr b)
      : name_(std::move(name)), a_(std::move(a)), b_(std::move(b)) {}

  std::string name() const override { return name_; }
  std::size_t generator_count() const override {
    return a_->generator_count() + b_->generator_count();
  }
  std::string generator_name(Letter s) const override {
    const auto na = a_->generator_count();
    return s < na ? "L" + a_->generator_name(s) : "R" + b_->generator_name(s - na);
  }
  Letter inverse_letter(Letter s) const override {
    const auto na = a_->generator_count();
    return s < na ? a_->inverse_letter(s) : na + b_->inverse_letter(s - na);
  }
  Element identity() const override { return join(a_->identity(), b_->identity()); }
  Element multiply(const Element& g, Letter s) const override {
    auto [x, y] = split(g);
    const auto na = a_->generator_count();
    if (s < na) return join(a_->multiply(x, s), y);
    return join(x, b_->multiply(y, s - na));
  }
  Element product(const Element& g, const Element& h) const override {
    auto [x, y] = split(g);
    auto [u, v] = split(h);
    return join(a_->product(x, u), b_->product(y, v));
  }
  Element inverse(const Element& g) const override {
    auto [x, y] = split(g);
    return join(a_->inverse(x), b_->inverse(y));
  }
  std::string format(const Element& g) const override {
    auto [x, y] = split(g);
    return "<" + a_->format(x) + "|" + b_->format(y) + ">";
  }
  std::optional<std::int64_t> word_length(const Element& g) const override {
    auto [x, y] = split(g);
    auto lx = a_->word_length(x), ly = b_->word_length(y);
    if (!lx || !ly) return std::nullopt;
    return *lx + *ly;
  }
  std::optional<std::vector<std::int64_t>> coordinates(const Element& g) const override {
    auto [x, y] = split(g);
    auto cx = a_->coordinates(x), cy = b_->coordinates(y);
    if (!cx || !cy) return std::nullopt;
    cx->insert(cx->end(), cy->begin(), cy->end());
    return cx;
  }

 private:
  static Element join(const Element& x, const Element& y) {
    Element r;
    r.reserve(1 + x.size() + y.size());
    r.push_back(static_cast<std::int64_t>(x.size()));
    r.insert(r.end(), x.begin(), x.end());
    r.insert(r.end(), y.begin(), y.end());
    return r;
  }
  static std::pair<Element, Element> split(const Element& g) {
    const auto n = static_cast<std::size_t>(g.at(0));
    return {Element(g.begin() + 1, g.begin() + 1 + static_cast<std::ptrdiff_t>(n)),
            Element(g.begin() + 1 + static_cast<std::ptrdiff_t>(n), g.end())};
  }

  std::string name_;
  GroupPtr a_, b_;
};

// ---- lamplighter Z2 wr Z -------------------------------------------------

class Lamplighter final : public GroupModel {
 public:
  std::string name() const override { return "lamplighter"; }
  std::size_t generator_count() const override { return 3; }  // t, t^-1, lamp
  std::string generator_name(Letter s) const override {
    return s == 0 ? "t" : s == 1 ? "T" : "l";
  }
  Letter inverse_letter(Letter s) const override { return s == 2 ? 2 : s ^ 1U; }
  Element identity() const override { return {0}; }
  Element multiply(const Element& g, Letter s) const override {
    Element r = g;
    if (s == 0) ++r[0];
    if (s == 1) --r[0];
    if (s == 2) toggle(r, r[0]);
    return r;
  }
  Element product(const Element& g, const Element& h) const override {
    Element r = g;
    for (std::size_t i = 1; i < h.size(); ++i) toggle(r, g[0] + h[i]);
    r[0] = g[0] + h[0];
    return r;
  }
  Element inverse(const Element& g) const override {
    Element r{-g[0]};
    for (std::size_t i = 1; i < g.size(); ++i) r.push_back(g[i] - g[0]);
    return r;
  }
  std::string format(const Element& g) const override {
    std::ostringstream out;
    out << "t^" << g[0] << "{";
    for (std::size_t i = 1; i < g.size(); ++i) out << (i > 1 ? "," : "") << g[i];
    out << "}";
    return out.str();
  }

 private:
  static void toggle(Element& r, std::int64_t pos) {
    auto it = std::lower_bound(r.begin() + 1, r.end(), pos);
    if (it != r.end() && *it == pos)
      r.erase(it);
    else
      r.insert(it, pos);
  }
};

// ---- Z wr Z ----------------------------------------------------------------

class WreathZZ final : public GroupModel {
 public:
  std::string name() const override { return "zwrz"; }
  std::size_t generator_count() const override { return 4; }  // t, t^-1, a, a^-1
  std::string generator_name(Letter s) const override {
    static const char* names[] = {"t", "T", "a", "A"};
    return names[s];
  }
  Letter inverse_letter(Letter s) const override { return s ^ 1U; }
  Element identity() const override { return {0}; }
  Element multiply(const Element& g, Letter s) const override {
    Element r = g;
    if (s == 0) ++r[0];
    if (s == 1) --r[0];
    if (s == 2) add(r, r[0], 1);
    if (s == 3) add(r, r[0], -1);
    return r;
  }
  Element product(const Element& g, const Element& h) const override {
    Element r = g;
    for (std::size_t i = 1; i + 1 < h.size(); i += 2) add(r, g[0] + h[i], h[i + 1]);
    r[0] = g[0] + h[0];
    return r;
  }
  Element inverse(const Element& g) const override {
    Element r{-g[0]};
    for (std::size_t i = 1; i + 1 < g.size(); i += 2) {
      r.push_back(g[i] - g[0]);
      r.push_back(-g[i + 1]);
    }
    return r;
  }
  std::string format(const Element& g) const override {
    std::ostringstream out;
    out << "t^" << g[0] << "{";
    for (std::size_t i = 1; i + 1 < g.size(); i += 2)
      out << (i > 1 ? "," : "") << g[i] << ":" << g[i + 1];
    out << "}";
    return out.str();
  }

 private:
  static void add(Element& r, std::int64_t pos, std::int64_t v) {
    std::size_t i = 1;
    while (i + 1 < r.size() && r[i] < pos) i += 2;
    if (i + 1 < r.size() && r[i] == pos) {
      r[i + 1] += v;
      if (r[i + 1] == 0) r.erase(r.begin() + static_cast<std::ptrdiff_t>(i), r.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else {
      r.insert(r.begin() + static_cast<std::ptrdiff_t>(i), {pos, v});
    }
  }
};

std::int64_t parse_count(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::kUsage, "unknown-group", "bad parameter in '" + spec + "'");
  }
}

std::vector<std::int64_t> parse_counts(const std::string& text, const std::string& spec) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(parse_count(part, spec));
  return out;
}

// "z" -> 0 (infinite), "z3" -> 3
std::int64_t parse_factor(const std::string& text, const std::string& spec) {
  if (text.empty() || text[0] != 'z') fail(ErrorKind::kUsage, "unknown-group", "bad factor in '" + spec + "'");
  if (text == "z") return 0;
  const std::int64_t n = parse_count(text.substr(1), spec);
  if (n < 1) fail(ErrorKind::kUsage, "unknown-group", "factor order must be >= 1");
  return n;
}

}  // namespace

Element evaluate(const GroupModel& group, std::span<const Letter> word) {
  Element g = group.identity();
  for (Letter s : word) {
    if (s >= group.generator_count())
      fail(ErrorKind::kInvalidInput, "bad-letter", std::to_string(s));
    g = group.multiply(g, s);
  }
  return g;
}

// ---- free products of cyclic groups --------------------------------------

FreeProductOfCyclics::FreeProductOfCyclics(std::vector<std::int64_t> orders, std::string name)
    : orders_(std::move(orders)), name_(std::move(name)) {
  for (std::size_t f = 0; f < orders_.size(); ++f) {
    if (orders_[f] < 0) fail(ErrorKind::kInvalidInput, "bad-group", "negative order");
    if (orders_[f] == 1) continue;
    letters_.emplace_back(f, 1);
    if (orders_[f] != 2) letters_.emplace_back(f, -1);
  }
  if (name_.empty()) {
    for (std::size_t f = 0; f < orders_.size(); ++f)
      name_ += (f ? "*" : "") + (orders_[f] == 0 ? std::string("z") : "z" + std::to_string(orders_[f]));
    if (name_.empty()) name_ = "trivial";
  }
}

Letter FreeProductOfCyclics::letter(std::size_t factor, bool inverse) const {
  for (Letter s = 0; s < letters_.size(); ++s)
    if (letters_[s].first == factor && (letters_[s].second == 1 || orders_[factor] == 2) != inverse)
      return s;
  for (Letter s = 0; s < letters_.size(); ++s)
    if (letters_[s].first == factor) return s;
  fail(ErrorKind::kInvalidInput, "bad-letter", "factor has no generator");
}

std::string FreeProductOfCyclics::generator_name(Letter s) const {
  const auto [f, e] = letters_.at(s);
  return e == 1 ? letter_name(f) : letter_name(f) + "^-1";
}

Letter FreeProductOfCyclics::inverse_letter(Letter s) const {
  const auto [f, e] = letters_.at(s);
  if (orders_[f] == 2) return s;
  return e == 1 ? s + 1 : s - 1;
}

std::int64_t FreeProductOfCyclics::normalize(std::size_t factor, std::int64_t e) const {
  const std::int64_t n = orders_[factor];
  if (n == 0) return e;
  return ((e % n) + n) % n;
}

std::int64_t FreeProductOfCyclics::syllable_length(std::size_t factor, std::int64_t e) const {
  const std::int64_t n = orders_[factor];
  if (n == 0) return std::abs(e);
  return std::min(e, n - e);
}

Element FreeProductOfCyclics::times_syllable(Element g, std::size_t factor, std::int64_t e) const {
  e = normalize(factor, e);
  if (e == 0) return g;
  if (!g.empty() && static_cast<std::size_t>(g[g.size() - 2]) == factor) {
    const std::int64_t merged = normalize(factor, checked_add(g.back(), e));
    if (merged == 0) {
      g.resize(g.size() - 2);
    } else {
      g.back() = merged;
    }
    return g;
  }
  g.push_back(static_cast<std::int64_t>(factor));
  g.push_back(e);
  return g;
}

Element FreeProductOfCyclics::multiply(const Element& g, Letter s) const {
  const auto [f, e] = letters_.at(s);
  return times_syllable(g, f, e);
}

Element FreeProductOfCyclics::product(const Element& g, const Element& h) const {
  Element r = g;
  for (std::size_t i = 0; i + 1 < h.size(); i += 2)
    r = times_syllable(std::move(r), static_cast<std::size_t>(h[i]), h[i + 1]);
  return r;
}

Element FreeProductOfCyclics::inverse(const Element& g) const {
  Element r;
  for (std::size_t i = g.size(); i >= 2; i -= 2) {
    const auto f = static_cast<std::size_t>(g[i - 2]);
    r.push_back(g[i - 2]);
    r.push_back(normalize(f, -g[i - 1]));
  }
  return r;
}

std::string FreeProductOfCyclics::format(const Element& g) const {
  if (g.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i + 1 < g.size(); i += 2)
    out += (i ? " " : "") + power(letter_name(static_cast<std::size_t>(g[i])), g[i + 1]);
  return out;
}

std::optional<std::int64_t> FreeProductOfCyclics::word_length(const Element& g) const {
  std::int64_t len = 0;
  for (std::size_t i = 0; i + 1 < g.size(); i += 2)
    len += syllable_length(static_cast<std::size_t>(g[i]), g[i + 1]);
  return len;
}

bool FreeProductOfCyclics::is_free() const {
  return std::all_of(orders_.begin(), orders_.end(), [](auto n) { return n == 0 || n == 1; });
}

// ---- central amalgam <a,b | a^p = b^q> ------------------------------------

CentralAmalgam::CentralAmalgam(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p < 2 || q < 2) fail(ErrorKind::kUsage, "unknown-group", "central amalgam needs p, q >= 2");
}

std::string CentralAmalgam::name() const {
  return "amalgam:central:" + std::to_string(p_) + "," + std::to_string(q_);
}

std::string CentralAmalgam::generator_name(Letter s) const {
  static const char* names[] = {"a", "a^-1", "b", "b^-1"};
  return names[s];
}

namespace {

Element central_step(Element g, std::size_t factor, std::int64_t sign, std::int64_t order) {
  const bool same = g.size() >= 3 && static_cast<std::size_t>(g[g.size() - 2]) == factor;
  if (same) {
    const std::int64_t e = g.back() + sign;
    if (e == order) {
      g.resize(g.size() - 2);
      g[0] += 1;
    } else if (e == 0) {
      g.resize(g.size() - 2);
    } else {
      g.back() = e;
    }
    return g;
  }
  g.push_back(static_cast<std::int64_t>(factor));
  if (sign > 0) {
    g.push_back(1);
  } else {
    g.push_back(order - 1);
    g[0] -= 1;
  }
  return g;
}

}  // namespace

Element CentralAmalgam::multiply(const Element& g, Letter s) const {
  const std::size_t factor = s / 2;
  return central_step(g, factor, s % 2 ? -1 : 1, factor == 0 ? p_ : q_);
}

Element CentralAmalgam::product(const Element& g, const Element& h) const {
  Element r = g;
  r[0] = checked_add(r[0], h[0]);
  for (std::size_t i = 1; i + 1 < h.size(); i += 2) {
    const auto factor = static_cast<std::size_t>(h[i]);
    for (std::int64_t k = 0; k < h[i + 1]; ++k) r = central_step(std::move(r), factor, 1, factor == 0 ? p_ : q_);
  }
  return r;
}

Element CentralAmalgam::inverse(const Element& g) const {
  Element r{-g[0]};
  for (std::size_t i = g.size(); i >= 3; i -= 2) {
    const auto factor = static_cast<std::size_t>(g[i - 2]);
    for (std::int64_t k = 0; k < g[i - 1]; ++k) r = central_step(std::move(r), factor, -1, factor == 0 ? p_ : q_);
  }
  return r;
}

std::string CentralAmalgam::format(const Element& g) const {
  std::string out;
  if (g[0] != 0) out = power("c", g[0]);
  for (std::size_t i = 1; i + 1 < g.size(); i += 2)
    out += (out.empty() ? "" : " ") + power(g[i] == 0 ? "a" : "b", g[i + 1]);
  return out.empty() ? "e" : out;
}

// ---- BS(1,n) ------------------------------------------------------------

BaumslagSolitar::BaumslagSolitar(std::int64_t n) : n_(n) {
  if (n < 1) fail(ErrorKind::kUsage, "unknown-group", "BS(1,n) needs n >= 1");
}

std::string BaumslagSolitar::name() const { return "bs:1," + std::to_string(n_); }

std::string BaumslagSolitar::generator_name(Letter s) const {
  static const char* names[] = {"a", "a^-1", "t", "t^-1"};
  return names[s];
}

Element BaumslagSolitar::make(std::int64_t k, std::int64_t num, std::int64_t m) const {
  if (num == 0) m = 0;
  if (n_ == 1) m = 0;
  while (m > 0 && num % n_ == 0) {
    num /= n_;
    --m;
  }
  return {k, m, num};
}

Element BaumslagSolitar::product(const Element& g, const Element& h) const {
  // (x,k)(y,l) = (x + n^k y, k + l)
  const std::int64_t k = g[0], m = g[1], a = g[2];
  const std::int64_t l = h[0], m2 = h[1], b = h[2];
  if (n_ == 1) return {checked_add(k, l), 0, checked_add(a, b)};
  const std::int64_t big = std::max({m, m2 - k, std::int64_t{0}});
  const std::int64_t num =
      checked_add(checked_mul(a, ipow(n_, big - m)), checked_mul(b, ipow(n_, k + big - m2)));
  return make(checked_add(k, l), num, big);
}

Element BaumslagSolitar::multiply(const Element& g, Letter s) const {
  static const Element gens[] = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0}, {-1, 0, 0}};
  return product(g, gens[s]);
}

Element BaumslagSolitar::inverse(const Element& g) const {
  const std::int64_t k = g[0], m = g[1], a = g[2];
  if (n_ == 1) return {-k, 0, -a};
  if (k <= 0) return make(-k, -checked_mul(a, ipow(n_, -k)), m);
  return make(-k, -a, m + k);
}

BaumslagSolitar::Britton BaumslagSolitar::britton(const Element& g) const {
  const std::int64_t k = g[0], m = g[1], num = g[2];
  Britton b;
  b.i = std::max({m, -k, std::int64_t{0}});
  b.s = n_ == 1 ? num : checked_mul(num, ipow(n_, b.i - m));
  b.j = k + b.i;
  return b;
}

Element BaumslagSolitar::from_britton(const Britton& b) const { return make(b.j - b.i, b.s, b.i); }

std::string BaumslagSolitar::format(const Element& g) const {
  const Britton b = britton(g);
  std::string out;
  if (b.i) out += power("t", -b.i);
  if (b.s) out += (out.empty() ? "" : " ") + power("a", b.s);
  if (b.j) out += (out.empty() ? "" : " ") + power("t", b.j);
  return out.empty() ? "e" : out;
}

// ---- lookup ------------------------------------------------------------------

GroupPtr make_group(const std::string& spec) {
  auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) fail(ErrorKind::kUsage, "unknown-group", "'" + spec + "' needs a parameter");
  };

  if (spec == "trivial") return std::make_shared<FreeProductOfCyclics>(std::vector<std::int64_t>{}, "trivial");
  if (head == "z" || head == "zn") {
    need_arg();
    const auto n = static_cast<std::size_t>(parse_count(arg, spec));
    if (n < 1) fail(ErrorKind::kUsage, "unknown-group", "z:n needs n >= 1");
    std::vector<std::vector<std::int64_t>> gens(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) gens[i][i] = 1;
    auto g = std::make_shared<AbelianLattice>(spec, n, gens, std::nullopt);
    g->mark_standard();
    return g;
  }
  if (head == "zs") {
    need_arg();
    auto cs = parse_counts(arg, spec);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if (cs.empty() || cs.front() < 1) fail(ErrorKind::kUsage, "unknown-group", "zs needs positive steps");
    std::vector<std::vector<std::int64_t>> gens;
    for (auto c : cs) gens.push_back({c});
    std::optional<std::int64_t> top;
    bool interval = true;
    for (std::size_t i = 0; i < cs.size(); ++i) interval = interval && cs[i] == static_cast<std::int64_t>(i + 1);
    if (interval) top = cs.back();
    return std::make_shared<AbelianLattice>(spec, 1, gens, top);
  }
  if (head == "f" || head == "fk") {
    need_arg();
    const auto k = parse_count(arg, spec);
    return std::make_shared<FreeProductOfCyclics>(std::vector<std::int64_t>(static_cast<std::size_t>(k), 0), spec);
  }
  if (head == "cyclic") {
    need_arg();
    const auto n = parse_count(arg, spec);
    if (n < 1) fail(ErrorKind::kUsage, "unknown-group", "cyclic:n needs n >= 1");
    return std::make_shared<FreeProductOfCyclics>(std::vector<std::int64_t>{n}, spec);
  }
  if (head == "sym") {
    need_arg();
    const auto n = parse_count(arg, spec);
    if (n < 1 || n > 8) fail(ErrorKind::kUsage, "unknown-group", "sym:n needs 1 <= n <= 8");
    return std::make_shared<SymmetricGroup>(spec, static_cast<std::size_t>(n));
  }
  if (head == "product") {
    need_arg();
    auto plus = arg.find('+');
    if (plus == std::string::npos) fail(ErrorKind::kUsage, "unknown-group", "product:A+B");
    return std::make_shared<DirectProduct>(spec, make_group(arg.substr(0, plus)),
                                           make_group(arg.substr(plus + 1)));
  }
  if (spec == "lamplighter") return std::make_shared<Lamplighter>();
  if (spec == "zwrz") return std::make_shared<WreathZZ>();
  if (head == "amalgam") {
    need_arg();
    if (arg.rfind("central:", 0) == 0) {
      auto pq = parse_counts(arg.substr(8), spec);
      if (pq.size() != 2) fail(ErrorKind::kUsage, "unknown-group", "amalgam:central:p,q");
      return std::make_shared<CentralAmalgam>(pq[0], pq[1]);
    }
    std::vector<std::int64_t> orders;
    std::istringstream in(arg);
    std::string part;
    while (std::getline(in, part, '*')) orders.push_back(parse_factor(part, spec));
    if (orders.size() < 2) fail(ErrorKind::kUsage, "unknown-group", "amalgam needs two factors");
    return std::make_shared<FreeProductOfCyclics>(orders, spec);
  }
  if (head == "bs") {
    need_arg();
    auto v = parse_counts(arg, spec);
    if (v.size() != 2 || v[0] != 1) fail(ErrorKind::kUsage, "unknown-group", "only bs:1,n is supported");
    return std::make_shared<BaumslagSolitar>(v[1]);
  }
  if (spec == "relhyp:f2|a") return std::make_shared<FreeProductOfCyclics>(std::vector<std::int64_t>{0, 0}, spec);
  fail(ErrorKind::kUsage, "unknown-group", "unknown group '" + spec + "'");
}

std::vector<ZooEntry> zoo_catalog() {
  return {
      {"trivial", "the trivial group"},
      {"z:n", "Z^n with the standard basis"},
      {"zs:c1,c2,...", "Z generated by +-c1, +-c2, ..."},
      {"f:k", "free group of rank k"},
      {"cyclic:n", "Z/n with one generator"},
      {"sym:n", "symmetric group on n letters, adjacent transpositions"},
      {"product:A+B", "direct product of two zoo groups"},
      {"lamplighter", "Z2 wr Z with generators t, lamp"},
      {"zwrz", "Z wr Z with generators t, a"},
      {"amalgam:z2*z3", "free product of cyclic groups (any z / zN factors)"},
      {"amalgam:z*z", "free product Z * Z"},
      {"amalgam:central:p,q", "<a, b | a^p = b^q>, amalgam of Z and Z over Z"},
      {"bs:1,n", "Baumslag-Solitar BS(1,n), an HNN extension of Z"},
      {"relhyp:f2|a", "F2 = <a, b>, hyperbolic relative to <a>"},
  };
}

}  // namespace asdim
