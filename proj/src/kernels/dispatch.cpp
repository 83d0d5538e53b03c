#include <atomic>
#include <cstdlib>
#include <string>

#include "qlsa/errors.hpp"
#include "qlsa/kernels.hpp"

namespace qlsa::kernels {
namespace {

bool cpu_has(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(QLSA_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(QLSA_HAVE_NEON_TU)
        return true;  // Advanced SIMD is mandatory on AArch64
#else
        return false;
#endif
    }
    return false;
}

const KernelTable* lookup(Isa isa)
{
    if (!cpu_has(isa)) return nullptr;
    switch (isa) {
    case Isa::Scalar: return &scalar::table;
#if defined(QLSA_HAVE_AVX2_TU)
    case Isa::Avx2: return &avx2::table;
#endif
#if defined(QLSA_HAVE_NEON_TU)
    case Isa::Neon: return &neon::table;
#endif
    default: return nullptr;
    }
}

const KernelTable* pick_default()
{
    if (const char* env = std::getenv("QLSA_ISA")) {
        if (auto isa = parse_isa(env)) {
            if (const KernelTable* t = lookup(*isa)) return t;
        }
    }
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (const KernelTable* t = lookup(isa)) return t;
    }
    return &scalar::table;
}

std::atomic<const KernelTable*>& current()
{
    static std::atomic<const KernelTable*> ptr{pick_default()};
    return ptr;
}

}  // namespace

std::optional<KernelTable> table_for(Isa isa)
{
    if (const KernelTable* t = lookup(isa)) return *t;
    return std::nullopt;
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
        if (lookup(isa)) out.push_back(isa);
    }
    return out;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Isa active_isa() { return active().isa; }

void set_isa(Isa isa)
{
    const KernelTable* t = lookup(isa);
    if (!t) throw UnsupportedError("kernel ISA '" + std::string(to_string(isa)) + "' is not available on this host");
    current().store(t, std::memory_order_release);
}

std::string_view to_string(Isa isa)
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "scalar";
}

std::optional<Isa> parse_isa(std::string_view name)
{
    if (name == "scalar") return Isa::Scalar;
    if (name == "avx2") return Isa::Avx2;
    if (name == "neon") return Isa::Neon;
    return std::nullopt;
}

}  // namespace qlsa::kernels
