#pragma once

// Differential jumps: n is a jump of level e when D^(e) a^n and
// D^(e) a^{n+1} differ. Each ring presentation gets an engine that decides
// this; results are cached so repeated queries are cheap.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "bsroots/polyring.hpp"
#include "bsroots/rings.hpp"

namespace bsroots {

enum class Producer { Regular, Summand, Semigroup, Catalog };

std::string to_string(Producer producer);

class JumpEngine {
 public:
  virtual ~JumpEngine() = default;

  std::uint32_t prime() const { return prime_; }
  /// Declared generator count; the fundamental window at level e is [0, r p^e).
  std::size_t generator_count() const { return r_; }
  Producer producer() const { return producer_; }
  bool f_split() const { return f_split_; }
  /// Levels below this have no available jump set.
  unsigned min_level() const { return min_level_; }
  /// Extra slack used when checking thresholds on non-F-split presentations.
  std::uint64_t threshold_offset() const { return threshold_offset_; }
  /// Set when the ideal text was accepted under an asserted hypothesis.
  const std::string& note() const { return note_; }
  void set_note(std::string note) { note_ = std::move(note); }

  std::uint64_t window_end(unsigned e) const;

  /// Sorted jumps in [0, r p^e). Thread-safe; cached per level.
  std::vector<std::uint64_t> jump_set(unsigned e);
  /// Whether n is a jump of level e, for any n >= 0. Inside a computed
  /// window this is a lookup; otherwise it is decided directly.
  bool is_jump(unsigned e, std::uint64_t n);

 protected:
  JumpEngine(std::uint32_t p, std::size_t r, Producer producer, bool f_split)
      : prime_(p), r_(r), producer_(producer), f_split_(f_split) {}

  virtual std::vector<std::uint64_t> compute_window(unsigned e) = 0;
  virtual bool compute_is_jump(unsigned e, std::uint64_t n) = 0;
  void check_level(unsigned e) const;

  std::uint32_t prime_;
  std::size_t r_;
  Producer producer_;
  bool f_split_;
  unsigned min_level_ = 1;
  std::uint64_t threshold_offset_ = 0;
  std::string note_;

 private:
  std::mutex mutex_;
  std::map<unsigned, std::vector<std::uint64_t>> windows_;
  std::map<std::pair<unsigned, std::uint64_t>, bool> direct_;
};

using EnginePtr = std::shared_ptr<JumpEngine>;

/// Polynomial ring engine: compares C^e a^n with C^e a^{n+1}, which decides
/// equality of the differential closures (a^n)^{[p^e]}-style D-ideals.
EnginePtr make_regular_engine(const Ideal& a, Producer producer = Producer::Regular, bool f_split = true);
EnginePtr make_semigroup_engine(const SemigroupRingPresentation& ring, const SemigroupIdeal& a, std::size_t r);
EnginePtr make_catalog_engine(const CatalogPresentation& ring);

/// Dispatches on the presentation: polynomial rings to the regular engine,
/// monomial subalgebras through lift_ideal, semigroup rings to the
/// semigroup engine and catalog rings to their closed forms. For catalog
/// rings the ideal text may be empty or must name the catalog element.
EnginePtr make_engine(const RingPresentation& ring, std::string_view ideal_text);

struct JumpTable {
  std::uint32_t p = 2;
  std::size_t r = 0;
  Producer producer = Producer::Regular;
  std::map<unsigned, std::vector<std::uint64_t>> levels;

  /// {"p":5,"r":3,"producer":"summand","levels":{"1":[4,6,9,11,14]}}
  std::string to_json() const;
};

/// Jump sets for levels first..last, computed in parallel across levels.
JumpTable jump_table(JumpEngine& engine, unsigned first, unsigned last);

/// max{n >= 0 : a^n not contained in c^{[p^e]}} on a polynomial ring.
/// Throws PreconditionError when c is the unit ideal or a is not inside the
/// radical of c (tested up to the 4096-th power of each generator).
std::uint64_t nu_invariant(const Ideal& a, const Ideal& c, unsigned e);

/// max{n >= 0 : C^e a^n not contained in c}; equal to nu_invariant on a
/// polynomial ring, computed through Cartier images instead.
std::uint64_t cartier_nu_invariant(const Ideal& a, const Ideal& c, unsigned e);

}  // namespace bsroots
