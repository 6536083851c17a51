#pragma once

#include <omp.h>

namespace padecert {

// Kernels with independent cells take an execution mode; Serial is the
// reference schedule and Parallel the OpenMP one.  Cells write to disjoint
// slots and all arithmetic is exact, so both modes must produce identical
// bits; tests compare them and the bench tool times them.
enum class Exec { Serial, Parallel };

template <typename F>
void par_for(Exec mode, long n, F&& body) {
  if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) body(i);
  } else {
    for (long i = 0; i < n; ++i) body(i);
  }
}

}  // namespace padecert
