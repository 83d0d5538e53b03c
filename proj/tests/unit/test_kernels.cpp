#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "qlsa/errors.hpp"
#include "qlsa/kernels.hpp"

using namespace qlsa::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng);
    return v;
}

struct Csr {
    std::size_t rows = 0;
    std::vector<std::int32_t> row_ptr{0};
    std::vector<std::int32_t> col;
    std::vector<double> val;
};

// Random CSR with uneven rows, some of them empty.
Csr random_csr(std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    Csr m;
    m.rows = rows;
    std::uniform_int_distribution<int> len(0, 11);
    std::uniform_int_distribution<std::int32_t> pick(0, static_cast<std::int32_t>(cols) - 1);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::size_t i = 0; i < rows; ++i) {
        const int k = (i % 7 == 3) ? 0 : len(rng);
        for (int j = 0; j < k; ++j) {
            m.col.push_back(pick(rng));
            m.val.push_back(u(rng));
        }
        m.row_ptr.push_back(static_cast<std::int32_t>(m.col.size()));
    }
    return m;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b)
{
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST(Kernels, ScalarAlwaysAvailable)
{
    const auto isas = available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), Isa::Scalar);
    EXPECT_TRUE(table_for(Isa::Scalar));
}

TEST(Kernels, ScalarReference)
{
    const auto& k = *table_for(Isa::Scalar);
    const std::vector<double> x{1, 2, 3}, y{4, -5, 6};
    EXPECT_EQ(k.dot(x.data(), y.data(), 3), 12.0);
    EXPECT_EQ(k.norm2(x.data(), 3), 14.0);
    std::vector<double> z = y;
    k.axpy(2, x.data(), z.data(), 3);
    EXPECT_EQ(z, (std::vector<double>{6, -1, 12}));
    z = y;
    k.xpby(x.data(), -1, z.data(), 3);
    EXPECT_EQ(z, (std::vector<double>{-3, 7, -3}));
    // [[1 0 2], [], [0 3 0]]
    const std::vector<std::int32_t> rp{0, 2, 2, 3}, ci{0, 2, 1};
    const std::vector<double> v{1, 2, 3};
    std::vector<double> out(3, 99);
    k.spmv(3, rp.data(), ci.data(), v.data(), x.data(), out.data());
    EXPECT_EQ(out, (std::vector<double>{7, 0, 6}));
}

TEST(Kernels, VariantsMatchScalar)
{
    const auto& ref = *table_for(Isa::Scalar);
    std::mt19937_64 rng(123);
    for (auto isa : available_isas()) {
        const auto& k = *table_for(isa);
        EXPECT_EQ(k.isa, isa);
        for (std::size_t n = 0; n <= 67; ++n) {
            const auto x = random_vec(n, rng);
            const auto y = random_vec(n, rng);
            double scale = 0;
            for (std::size_t i = 0; i < n; ++i) scale += std::abs(x[i] * y[i]);
            const double tol = 1e-15 * (scale + 1) * (n + 1);
            EXPECT_NEAR(k.dot(x.data(), y.data(), n), ref.dot(x.data(), y.data(), n), tol) << to_string(isa) << n;
            EXPECT_NEAR(k.norm2(x.data(), n), ref.norm2(x.data(), n), 1e-15 * (n + 1) * (n + 1));

            auto a = y, b = y;
            k.axpy(0.37, x.data(), a.data(), n);
            ref.axpy(0.37, x.data(), b.data(), n);
            EXPECT_TRUE(bit_equal(a, b)) << to_string(isa) << " axpy n=" << n;
            a = y;
            b = y;
            k.xpby(x.data(), -1.9, a.data(), n);
            ref.xpby(x.data(), -1.9, b.data(), n);
            EXPECT_TRUE(bit_equal(a, b)) << to_string(isa) << " xpby n=" << n;
        }
        for (std::size_t rows : {1u, 5u, 64u, 333u}) {
            const auto m = random_csr(rows, 50, rng);
            const auto x = random_vec(50, rng);
            std::vector<double> got(rows), want(rows);
            k.spmv(rows, m.row_ptr.data(), m.col.data(), m.val.data(), x.data(), got.data());
            ref.spmv(rows, m.row_ptr.data(), m.col.data(), m.val.data(), x.data(), want.data());
            for (std::size_t i = 0; i < rows; ++i) EXPECT_NEAR(got[i], want[i], 1e-13) << to_string(isa);
        }
    }
}

TEST(Kernels, SelectionAndParsing)
{
    EXPECT_EQ(parse_isa("scalar"), Isa::Scalar);
    EXPECT_EQ(parse_isa("avx2"), Isa::Avx2);
    EXPECT_EQ(parse_isa("neon"), Isa::Neon);
    EXPECT_FALSE(parse_isa("sse9"));
    EXPECT_EQ(to_string(Isa::Avx2), "avx2");

    const auto original = active_isa();
    set_isa(Isa::Scalar);
    EXPECT_EQ(active_isa(), Isa::Scalar);
    EXPECT_EQ(active().isa, Isa::Scalar);
    for (auto isa : {Isa::Avx2, Isa::Neon}) {
        if (table_for(isa)) {
            set_isa(isa);
            EXPECT_EQ(active_isa(), isa);
        } else {
            EXPECT_THROW(set_isa(isa), qlsa::UnsupportedError);
        }
    }
    set_isa(original);
}
