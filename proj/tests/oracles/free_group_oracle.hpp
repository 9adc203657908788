#pragma once

// Test-only brute-force references for free-group questions.

#include <random>
#include <vector>

#include "tcbounds/freewords.hpp"

namespace tcb::oracle {

// Every freely reduced word of length <= max_len in F(rank).
inline std::vector<Word> all_reduced_words(std::size_t rank, std::size_t max_len) {
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<Word> out{Word(rank)};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer)
      for (std::uint32_t g = 1; g <= rank; ++g)
        for (int s : {1, -1}) {
          const Letter l{g, s};
          if (!w.empty() && w.back().cancels(l)) continue;
          auto x = w;
          x.push_back(l);
          next.push_back(x);
        }
    for (const auto& w : next) out.push_back(Word::reduce(w, rank));
    layer = std::move(next);
  }
  return out;
}

// Searches every conjugator in `conjugators` for g u g^-1 == v.
inline bool conjugate_by_search(const Word& u, const Word& v,
                                const std::vector<Word>& conjugators) {
  for (const auto& g : conjugators)
    if (g * u * g.inverse() == v) return true;
  return false;
}

// Uniform random letter sequence (not necessarily reduced) of length <= max_len.
inline std::vector<Letter> random_letters(std::mt19937& rng, std::size_t rank,
                                          std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen_dist(1, static_cast<std::uint32_t>(rank));
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::vector<Letter> out(len_dist(rng));
  for (auto& l : out) l = Letter{gen_dist(rng), sign_dist(rng) ? 1 : -1};
  return out;
}

inline Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  return Word::reduce(random_letters(rng, rank, max_len), rank);
}

}  // namespace tcb::oracle
