#pragma once

#include <vector>

namespace ncinvert {

/* Compositions are finite sequences of positive integer parts.  Generalized
 * compositions admit zero parts and carry their length explicitly; they show
 * up as letter-multiplicity vectors of words.  Words are sequences of
 * positive letters.  All three share the plain vector representation so they
 * can serve directly as ordered map keys; functions state which shape they
 * expect and validate where it matters. */
using Composition = std::vector<int>;
using GenComposition = std::vector<int>;
using Word = std::vector<int>;

bool is_composition(const Composition& parts);
bool is_gen_composition(const GenComposition& parts);

long weight(const std::vector<int>& parts);

/* Descents of I = (i_1,...,i_r) of weight n: the proper partial sums
 * i_1, i_1+i_2, ..., excluding n itself.  Strictly increasing. */
std::vector<int> descent_set(const Composition& comp);

/* Inverse of descent_set on subsets of {1,...,n-1}. */
Composition composition_from_descent_set(const std::vector<int>& descents, long n);

/* Conjugate I~ of I, defined by the mirrored complement of the descent set:
 * D(I~) = { n - d : d in {1,...,n-1} \ D(I) }.  An involution with
 * len(I) + len(I~) = n + 1. */
Composition conjugate(const Composition& comp);

/* All J coarser than I, i.e. with D(J) a subset of D(I).  Enumerated over
 * descent subsets in increasing bitmask order; 2^(len(I)-1) results. */
std::vector<Composition> coarsenings(const Composition& comp);

/* All compositions of n in lexicographic order; the single empty composition
 * for n = 0. */
std::vector<Composition> compositions_of(long n);

/* Letter-multiplicity vector of a word over the alphabet {1,...,size};
 * entry j (0-based) counts occurrences of the letter j+1. */
GenComposition evaluation(const Word& word, int size);

/* Evaluation with zero entries dropped: the packed evaluation pEv. */
Composition packed_evaluation(const Word& word);

/* Zero parts dropped, order kept. */
Composition corresponding_composition(const GenComposition& gen);

/* Parking type: length = weight + 1 and every prefix sum j_1+...+j_k >= k
 * for k in [1, weight].  Exactly the evaluations (over an alphabet of size
 * weight+1) of nondecreasing parking functions. */
bool is_parking_type(const GenComposition& gen);

/* The unique nondecreasing word with the given evaluation. */
Word word_from_evaluation(const GenComposition& gen);

/* ||w|| = sum over letters of (letter - 1). */
long word_norm(const Word& word);

}  // namespace ncinvert
