#include "picketlab/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

namespace picketlab {

namespace {

struct Cell {
  int l;
  int m;
};

std::vector<Cell> sweep_cells(int max_m) {
  std::vector<Cell> cells;
  for (int m = 1; m <= max_m; ++m)
    for (int l = 1; l <= m; ++l) cells.push_back({l, m});
  return cells;
}

std::vector<VerifyRow> run_sweep(int max_m, int threads,
                                 const std::function<VerifyRow(Cell)>& eval) {
  const std::vector<Cell> cells = sweep_cells(max_m);
  std::vector<VerifyRow> rows(cells.size());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(cells.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = eval(cells[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        try {
          rows[i] = eval(cells[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

}  // namespace

std::vector<VerifyRow> verify_theorem1(const Embedding& M, int max_m,
                                       int threads) {
  if (max_m < 0) max_m = M.beta.part(0) + 1;
  return run_sweep(max_m, threads, [&M](Cell c) {
    const QuotientReport rep = quotient_dim_to_picket(M, c.l, c.m);
    return VerifyRow{c.l, c.m, rep.formula, rep.subfactor, rep.oracle};
  });
}

std::vector<VerifyRow> verify_theorem3(const Embedding& M, int max_m,
                                       int threads) {
  if (max_m < 0) max_m = M.beta.part(0) + 1;
  return run_sweep(max_m, threads, [&M](Cell c) {
    const QuotientReport rep = quotient_dim_from_picket(M, c.m - c.l, c.m);
    return VerifyRow{c.l, c.m, rep.formula, rep.subfactor, rep.oracle};
  });
}

void write_tsv_header(std::ostream& os) {
  os << "embedding-id\tl\tm\tcount_tableau\tcount_subfactor\tcount_hom\tagree\n";
}

void write_tsv_rows(std::ostream& os, const std::string& embedding_id,
                    const std::vector<VerifyRow>& rows) {
  for (const VerifyRow& r : rows) {
    os << embedding_id << '\t' << r.l << '\t' << r.m << '\t' << r.count_tableau
       << '\t' << r.count_subfactor << '\t' << r.count_hom << '\t'
       << (r.agree() ? "yes" : "no") << '\n';
  }
}

int worker_count() {
  if (const char* env = std::getenv("PICKETLAB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace picketlab
