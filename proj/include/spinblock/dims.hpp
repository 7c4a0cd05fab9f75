#pragma once

#include <optional>
#include <vector>

#include "spinblock/fock.hpp"
#include "spinblock/laurent.hpp"
#include "spinblock/partitions.hpp"
#include "spinblock/root_datum.hpp"
#include "spinblock/tableaux.hpp"

namespace spinblock {

// Graded dimension of e(i) R^{N Lambda_0}_theta e(j). Words whose content is not
// theta give zero and set *mismatch when provided.
LaurentPoly graded_dim(int level, const RootVector& theta, const std::vector<int>& word_i,
                       const std::vector<int>& word_j, int p, bool* mismatch = nullptr);

// Same quantity from the explicit sum over shapes and tableau pairs.
LaurentPoly graded_dim_tableaux(int level, const RootVector& theta, const std::vector<int>& word_i,
                                const std::vector<int>& word_j, int p);

// Ungraded dimension as a sum over strict shapes and strictly standard tableaux.
long long ungraded_dim(int level, const RootVector& theta, const std::vector<int>& word_i,
                       const std::vector<int>& word_j, int p);

// Full graded dimension of R^{N Lambda_0}_theta, summed over all pairs of words.
LaurentPoly cyclotomic_dim(int level, const RootVector& theta, int p);

// Product of quantum factorials of the divided exponents, with q_i = q^{half_norm(i)}.
LaurentPoly word_factorial(const Word& w, int ell);
// Sum of (alpha|alpha) m (m-1) / 4 over divided letters.
long long word_bracket(const Word& w, int ell);
LaurentPoly divided_power_dim(int level, const RootVector& theta, const Word& word_i, const Word& word_j, int p);
// Groups maximal runs of equal letters into divided powers.
Word divide_runs(const std::vector<int>& word);
// First divided word (maximal runs divided) of content theta whose idempotent truncation has dimension 1.
std::optional<Word> find_unit_divided_word(int level, const RootVector& theta, int p);

// Closed forms attached to the weight one RoCK analysis.
LaurentPoly m_ij(int i, int j, int ell);
LaurentPoly chi_poly(int i, int k, int ell);
// Graded dimension of e^i A_l e^j from its basis.
LaurentPoly zigzag_block_dim(int ell, int i, int j);
LaurentPoly dim_Y1(int level, int ell, int i, int j);

// Shape obtained from core by an elementary slide down on runner k in I.
Partition slide_down_runner(const Partition& core, int p, int k);
// Level N shape with component s replaced by the runner k slide of core.
Multipartition slide_down_component(const Partition& core, int p, int level, int s, int k);

// Sum of deg(S)/deg(U) over tableaux of the slide shape that extend U by the
// expanded Gelfand-Graev word for i.
LaurentPoly slide_family_degree_sum(const Multipartition& shape, const Tableau& u, int i, int p);
// Same sum for the runner k slide of component s of core^N; core must be 1-Rouquier.
LaurentPoly slide_family_degree_sum(const Partition& core, int p, const Tableau& u, int i, int k, int s = 1);

// Weight one double sum over P^N(core^N, 1) with fixed tableaux U, V of core^N.
LaurentPoly weight_one_double_sum(const Partition& core, int p, int level, int i, int j, const Tableau& u,
                                  const Tableau& v);

// Sum over k, l in I^{N cont(core)} of the divided power dimension for the words
// k g^i and l g^j.
LaurentPoly gg_truncated_dim(const Partition& core, int p, int level, int i, int j);

long long dim_Yd_closed(int p, int d);
long long dim_Yd_sum(int p, int d, const Partition& core);
long long dim_Yd_sum(int p, int d);

long long factorial(int n);
long long multinomial(const std::vector<int>& parts);
// Standard Young tableaux count.
long long kostka(const Partition& lambda);
// Strictly standard (shifted) tableaux count of a strict partition.
long long strict_kostka(const Partition& lambda);

// Strict (core, lambda) sequences, optionally with a fixed color sequence.
// The color of a step is the quotient component that grows.
long long seq_count(const Partition& core, const Partition& lambda, int p,
                    const std::optional<std::vector<int>>& colors = std::nullopt);
// K'_{lambda^(0)} prod K_{lambda^(j)} for colors of the right content, else 0.
long long seq_count_formula(const Partition& lambda, int p, const std::optional<std::vector<int>>& colors);

}  // namespace spinblock
