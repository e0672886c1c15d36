#ifndef FMZV_PARALLEL_HPP
#define FMZV_PARALLEL_HPP

namespace fmzv {

// Worker count for the OpenMP regions: the OpenMP default, capped by the
// FMZV_THREADS environment variable when set. 1 in serial builds.
int thread_cap();

} // namespace fmzv

#endif // FMZV_PARALLEL_HPP
