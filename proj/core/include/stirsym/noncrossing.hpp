#pragma once

#include <vector>

#include "stirsym/partition.hpp"
#include "stirsym/symfunc.hpp"

namespace stirsym {

/// Set partition of [n]: blocks sorted internally, ordered by their minima.
using SetPartition = std::vector<std::vector<int>>;

/// No i < j < k < l with i, k in one block and j, l in another.
bool is_noncrossing(const SetPartition& pi);

/// Block sizes as a partition.
Partition block_type(const SetPartition& pi);

/// All noncrossing partitions of [n] (Catalan many), built from the block
/// containing 1 and independent fillings of the gaps it leaves.
std::vector<SetPartition> noncrossing_partitions(int n);

/// All set partitions of [n] (restricted growth strings), Bell many.
std::vector<SetPartition> set_partitions(int n);

/// sum over NC_n of e_{type}, in the e basis.
SymFunc omega_pf(int n);

}  // namespace stirsym
