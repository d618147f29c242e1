#pragma once

#include <cstddef>

#include "stochsub/guards.hpp"
#include "stochsub/language.hpp"
#include "stochsub/matrix.hpp"
#include "stochsub/substitution.hpp"

namespace stochsub {

// Mean matrix of the l-induced substitution, rows and columns indexed by the
// legal l-words in table order. Entry (w, u) is E|theta_l(u)|_w where
// theta_l(u) lists the l-windows of theta(u) starting inside theta(u_1).
//
// Computed exactly by enumerating joint realisations of the letter images of
// u, truncated as soon as every counted window is fully determined.
LabeledMatrix induced_mean_matrix(const SubstitutionRule& rule, std::size_t ell,
                                  const LanguageTable& language,
                                  const Guards& guards = Guards::defaults());

LabeledMatrix induced_mean_matrix(const SubstitutionRule& rule, std::size_t ell,
                                  const Guards& guards = Guards::defaults());

}  // namespace stochsub
