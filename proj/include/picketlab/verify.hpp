#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "picketlab/hom.hpp"

namespace picketlab {

struct VerifyRow {
  int l = 0;
  int m = 1;
  long long count_tableau = -1;
  long long count_subfactor = -1;
  long long count_hom = -1;
  bool agree() const {
    return count_tableau == count_subfactor && count_subfactor == count_hom;
  }
};

// Theorem 1 sweep: all 1 <= l <= m <= max_m (default beta_1 + 1), three routes.
std::vector<VerifyRow> verify_theorem1(const Embedding& M, int max_m = -1,
                                       int threads = 1);

// Theorem 3 sweep: tableau/subfactor routes on dual(M), Hom route through
// h_{m-l}^m on M itself.
std::vector<VerifyRow> verify_theorem3(const Embedding& M, int max_m = -1,
                                       int threads = 1);

void write_tsv_header(std::ostream& os);
void write_tsv_rows(std::ostream& os, const std::string& embedding_id,
                    const std::vector<VerifyRow>& rows);

// PICKETLAB_THREADS, defaulting to the available hardware parallelism.
int worker_count();

}  // namespace picketlab
