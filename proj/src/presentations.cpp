#include "tcbounds/presentations.hpp"

#include "tcbounds/error.hpp"
#include "tcbounds/word_parser.hpp"

namespace tcb {

Presentation::Presentation(Alphabet generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].rank() != generators_.rank())
      throw DomainError("relator " + std::to_string(i + 1) + " has wrong rank");
    if (relators_[i].empty())
      throw DomainError("relator " + std::to_string(i + 1) + " reduces to the identity");
  }
}

Presentation Presentation::parse(std::vector<std::string> generators,
                                 const std::vector<std::string>& relators) {
  Alphabet alphabet(std::move(generators));
  std::vector<Word> words;
  words.reserve(relators.size());
  for (const auto& r : relators) words.push_back(parse_word(r, alphabet));
  return Presentation(std::move(alphabet), std::move(words));
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators_.size(), rank());
  for (std::size_t i = 0; i < relators_.size(); ++i)
    for (const auto& l : relators_[i].letters()) m(i, l.gen - 1) += l.sign;
  return m;
}

bool Presentation::has_relator_cyclically(const Word& w) const {
  const Word core = cyclically_reduce(w).core;
  for (const auto& r : relators_) {
    const Word rc = cyclically_reduce(r).core;
    if (rc.size() != core.size()) continue;
    if (conjugate_in_free(rc, core) || conjugate_in_free(rc, core.inverse())) return true;
  }
  return false;
}

bool AbelianImage::is_zero() const {
  for (const auto& t : torsion)
    if (t != 0) return false;
  for (const auto& f : free)
    if (f != 0) return false;
  return true;
}

bool AbelianImage::has_infinite_order() const {
  for (const auto& f : free)
    if (f != 0) return true;
  return false;
}

AbelianInvariants abelianization(const Presentation& p) {
  // Z^n / rowspace(M) is isomorphic to Z^n / rowspace(M V) via x -> x V, and
  // M V has the same row space as the diagonal U M V. Generator j therefore
  // lands on row j of V, read coordinate-wise modulo the diagonal.
  const IntMatrix m = p.exponent_matrix();
  const auto snf = smith_decomposition(m);
  const std::size_t n = p.rank();

  AbelianInvariants out;
  std::vector<std::size_t> torsion_coords;
  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
    if (d == 0) {
      free_coords.push_back(i);
    } else if (d > 1) {
      torsion_coords.push_back(i);
      out.torsion.push_back(d);
    }
  }
  out.free_rank = free_coords.size();

  const auto& v = snf.column_transform;
  out.generator_images.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    auto& img = out.generator_images[g];
    for (std::size_t k = 0; k < torsion_coords.size(); ++k) {
      const std::size_t c = torsion_coords[k];
      Integer r = v(g, c) % snf.diagonal[c];
      if (r < 0) r += snf.diagonal[c];
      img.torsion.push_back(r);
    }
    for (std::size_t c : free_coords) img.free.push_back(v(g, c));
  }
  return out;
}

Word substitute(const std::vector<Word>& images, std::size_t target_rank, const Word& w) {
  Word out(target_rank);
  for (const auto& l : w.letters()) {
    const Word& img = images.at(l.gen - 1);
    out = out * (l.sign > 0 ? img : img.inverse());
  }
  return out;
}

HomCheck check_hom(const Presentation& source, const Alphabet& target,
                   const std::vector<Word>& images) {
  if (images.size() != source.rank())
    throw DomainError("need one image per generator: got " + std::to_string(images.size()) +
                      ", expected " + std::to_string(source.rank()));
  for (const auto& img : images)
    if (img.rank() != target.rank()) throw DomainError("image word over the wrong alphabet");
  HomCheck result;
  for (std::size_t i = 0; i < source.relators().size(); ++i) {
    Word img = substitute(images, target.rank(), source.relators()[i]);
    if (!img.empty()) {
      result.ok = false;
      result.failing_relator = i;
      result.failing_image = std::move(img);
      break;
    }
  }
  return result;
}

FreeHom::FreeHom(Presentation source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  const HomCheck check = check_hom(source_, target_, images_);
  if (!check.ok) {
    const auto& rel = source_.relators()[*check.failing_relator];
    throw VerificationError("map is not a homomorphism: relator " +
                                to_string(rel, source_.alphabet()) + " maps to " +
                                to_string(check.failing_image, target_),
                            to_string(rel, source_.alphabet()));
  }
}

Word apply_hom(const FreeHom& h, const Word& w) {
  if (w.rank() != h.source().rank()) throw DomainError("word is not over the source generators");
  return substitute(h.images(), h.target().rank(), w);
}

}  // namespace tcb
