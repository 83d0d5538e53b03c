#pragma once

// Vector and CSR kernels used by the CGNE solver. Each ISA variant lives in
// its own translation unit; the active one is picked at first use from the
// host CPU, or from QLSA_ISA=scalar|avx2|neon.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qlsa::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
    Isa isa;
    double (*dot)(const double* x, const double* y, std::size_t n);
    double (*norm2)(const double* x, std::size_t n);                       // sum of squares
    void (*axpy)(double a, const double* x, double* y, std::size_t n);     // y += a x
    void (*xpby)(const double* x, double b, double* y, std::size_t n);     // y = x + b y
    void (*spmv)(std::size_t rows, const std::int32_t* row_ptr, const std::int32_t* col, const double* val,
                 const double* x, double* y);                              // y = A x
};

/// Table for a specific ISA; nullopt if it was not compiled in or the CPU lacks it.
std::optional<KernelTable> table_for(Isa isa);
std::vector<Isa> available_isas();

const KernelTable& active();
Isa active_isa();
/// Throws UnsupportedError if the ISA is unavailable.
void set_isa(Isa isa);

std::string_view to_string(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

// Per-ISA entry points, defined in kernels_<isa>.cpp.
namespace scalar {
extern const KernelTable table;
}
namespace avx2 {
extern const KernelTable table;
}
namespace neon {
extern const KernelTable table;
}

}  // namespace qlsa::kernels
