#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asdim {

// Canonical (normal-form) encoding of a group element; the meaning of the
// integers is private to each model.
using Element = std::vector<std::int64_t>;
using Letter = std::size_t;

// A finitely generated group given by a normal-form engine. Letters
// 0..generator_count()-1 form a symmetric generating set S = S^-1.
class GroupModel {
 public:
  virtual ~GroupModel() = default;

  virtual std::string name() const = 0;
  virtual std::size_t generator_count() const = 0;
  virtual std::string generator_name(Letter s) const = 0;
  virtual Letter inverse_letter(Letter s) const = 0;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& g, Letter s) const = 0;  // g * s
  virtual Element product(const Element& g, const Element& h) const = 0;
  virtual Element inverse(const Element& g) const = 0;
  virtual std::string format(const Element& g) const = 0;

  // Closed-form word length |g|_S when one is known.
  virtual std::optional<std::int64_t> word_length(const Element&) const { return std::nullopt; }
  // Lattice coordinates for Z^n-like models (brick covers).
  virtual std::optional<std::vector<std::int64_t>> coordinates(const Element&) const {
    return std::nullopt;
  }
  virtual bool is_free() const { return false; }  // Cayley graph is a tree

  Element generator(Letter s) const { return multiply(identity(), s); }
};

using GroupPtr = std::shared_ptr<const GroupModel>;

// Normal form of a word: the product of its letters.
Element evaluate(const GroupModel& group, std::span<const Letter> word);

// Built-in zoo by name, e.g. "z:2", "f:2", "cyclic:5", "sym:3",
// "product:z:1+cyclic:2", "zs:1,2,3", "lamplighter", "zwrz",
// "amalgam:z2*z3", "amalgam:z*z", "amalgam:central:2,3", "bs:1,2", "trivial".
// Throws Error{kUsage, "unknown-group"}.
GroupPtr make_group(const std::string& spec);

struct ZooEntry {
  std::string spec;
  std::string description;
};
std::vector<ZooEntry> zoo_catalog();

// ---- concrete models used beyond name lookup ----------------------------

// Free product of cyclic factors (order 0 = infinite cyclic, 1 = trivial).
// Element encoding: alternating syllables (factor, exponent), exponent
// normalized to 1..order-1 for finite factors and nonzero for Z.
class FreeProductOfCyclics final : public GroupModel {
 public:
  explicit FreeProductOfCyclics(std::vector<std::int64_t> orders, std::string name = {});
  const std::vector<std::int64_t>& orders() const { return orders_; }
  // Letter for factor f raised to +1 / -1.
  Letter letter(std::size_t factor, bool inverse) const;

  std::string name() const override { return name_; }
  std::size_t generator_count() const override { return letters_.size(); }
  std::string generator_name(Letter s) const override;
  Letter inverse_letter(Letter s) const override;
  Element identity() const override { return {}; }
  Element multiply(const Element& g, Letter s) const override;
  Element product(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  std::string format(const Element& g) const override;
  std::optional<std::int64_t> word_length(const Element& g) const override;
  bool is_free() const override;

  // Multiply by factor^exponent.
  Element times_syllable(Element g, std::size_t factor, std::int64_t exponent) const;

 private:
  std::int64_t normalize(std::size_t factor, std::int64_t e) const;
  std::int64_t syllable_length(std::size_t factor, std::int64_t e) const;

  std::vector<std::int64_t> orders_;
  std::string name_;
  std::vector<std::pair<std::size_t, std::int64_t>> letters_;  // (factor, +-1)
};

// <a, b | a^p = b^q>, p, q >= 2, amalgamated over the central <c>, c = a^p.
// Encoding: [k, f1, e1, f2, e2, ...]: c^k times alternating syllables
// a^e (f=0, 0<e<p) and b^e (f=1, 0<e<q).
class CentralAmalgam final : public GroupModel {
 public:
  CentralAmalgam(std::int64_t p, std::int64_t q);
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  std::string name() const override;
  std::size_t generator_count() const override { return 4; }  // a, a^-1, b, b^-1
  std::string generator_name(Letter s) const override;
  Letter inverse_letter(Letter s) const override { return s ^ 1U; }
  Element identity() const override { return {0}; }
  Element multiply(const Element& g, Letter s) const override;
  Element product(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  std::string format(const Element& g) const override;

 private:
  std::int64_t p_, q_;
};

// BS(1,n) = <a, t | t a t^-1 = a^n> as the affine maps z -> n^k z + x with
// x in Z[1/n]. Encoding: [k, m, num] with x = num / n^m, m minimal (m = 0
// when num = 0). BS(1,1) is Z^2.
class BaumslagSolitar final : public GroupModel {
 public:
  explicit BaumslagSolitar(std::int64_t n);
  std::int64_t n() const { return n_; }

  std::string name() const override;
  std::size_t generator_count() const override { return 4; }  // a, a^-1, t, t^-1
  std::string generator_name(Letter s) const override;
  Letter inverse_letter(Letter s) const override { return s ^ 1U; }
  Element identity() const override { return {0, 0, 0}; }
  Element multiply(const Element& g, Letter s) const override;
  Element product(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  std::string format(const Element& g) const override;

  // Britton form t^-i a^s t^j with i, j >= 0 and i minimal.
  struct Britton {
    std::int64_t i = 0;
    std::int64_t s = 0;
    std::int64_t j = 0;
  };
  Britton britton(const Element& g) const;
  Element from_britton(const Britton& b) const;
  Element make(std::int64_t k, std::int64_t num, std::int64_t m) const;  // normalized

 private:
  std::int64_t n_;
};

}  // namespace asdim
