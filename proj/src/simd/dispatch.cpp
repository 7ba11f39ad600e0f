#include "mpm/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace mpm::simd {

const Kernels& active_kernels() {
    static const Kernels& chosen = [] () -> const Kernels& {
        const char* env = std::getenv("MPM_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
        if (const Kernels* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace mpm::simd
