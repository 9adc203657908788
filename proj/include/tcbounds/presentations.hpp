#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcbounds/freewords.hpp"
#include "tcbounds/smith.hpp"

namespace tcb {

/// Finite presentation <generators | relators>. Relators are freely reduced
/// and nonempty.
class Presentation {
 public:
  Presentation(Alphabet generators, std::vector<Word> relators);
  /// Convenience: parse every relator with the word grammar.
  static Presentation parse(std::vector<std::string> generators,
                            const std::vector<std::string>& relators);

  const Alphabet& alphabet() const { return generators_; }
  std::size_t rank() const { return generators_.rank(); }
  const std::vector<Word>& relators() const { return relators_; }

  /// relators x generators matrix of exponent sums.
  IntMatrix exponent_matrix() const;

  /// True when `w` is a relator up to cyclic rotation and inversion.
  bool has_relator_cyclically(const Word& w) const;

 private:
  Alphabet generators_;
  std::vector<Word> relators_;
};

/// Image of one generator in the abelianization Z^free x Z/d1 x ... .
struct AbelianImage {
  std::vector<Integer> torsion;  // one residue per torsion factor
  std::vector<Integer> free;     // one coordinate per free factor

  bool is_zero() const;
  bool has_infinite_order() const;
};

/// H_1 of a presented group, with the quotient map on generators.
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // d1 | d2 | ..., each >= 2
  std::vector<AbelianImage> generator_images;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// 1-based generator index, matching Letter::gen.
  const AbelianImage& image(std::uint32_t gen) const { return generator_images.at(gen - 1); }
};

AbelianInvariants abelianization(const Presentation& p);

/// Result of checking a candidate map into a free group.
struct HomCheck {
  bool ok = true;
  std::optional<std::size_t> failing_relator;  // index into relators()
  Word failing_image;
};

/// Every relator must map to the identity of F(target).
HomCheck check_hom(const Presentation& source, const Alphabet& target,
                   const std::vector<Word>& images);

/// Homomorphism from a presented group to a free group. Construction verifies
/// well-definedness; an ill-defined map raises VerificationError naming the
/// relator.
class FreeHom {
 public:
  FreeHom(Presentation source, Alphabet target, std::vector<Word> images);

  const Presentation& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(std::uint32_t gen) const { return images_.at(gen - 1); }

 private:
  Presentation source_;
  Alphabet target_;
  std::vector<Word> images_;
};

/// Substitute images letter by letter and freely reduce. `images` has one
/// word (over the target) per source generator.
Word substitute(const std::vector<Word>& images, std::size_t target_rank, const Word& w);

Word apply_hom(const FreeHom& h, const Word& w);

}  // namespace tcb
