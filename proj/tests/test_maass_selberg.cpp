#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <loopeis/maass_selberg.hpp>

using namespace loopeis;

namespace {

CartanMatrix aff(const char* t) { return finite_cartan(TypeLabel::parse(t)); }

ComplexFunctional cf(std::size_t n, Complex v) { return ComplexFunctional::constant(n, v); }

// Real functional with sigma(c) = target: the uniform one.
ComplexFunctional with_central(const CartanMatrix& a, double target) {
    double c = 0;
    for (auto x : central_coroot(a)) c += static_cast<double>(x);
    return cf(static_cast<std::size_t>(a.size()), target / c);
}

}  // namespace

TEST(MaassSelberg, TrivialHalf) {
    const auto a = aff("A1affine");
    const auto s = with_central(a, -1.0);
    const auto v = ms_inner_product(a, {1.0, s, s, {0.0, 0.0}});
    ASSERT_TRUE(v.value.has_value());
    EXPECT_NEAR(v.value->real(), 0.5, 1e-15);
    EXPECT_EQ(v.value->imag(), 0.0);
}

TEST(MaassSelberg, PoleOnLocus) {
    const auto a = aff("A1affine");
    const auto v = ms_inner_product(a, {1.0, with_central(a, 1.0), with_central(a, -1.0), {0.3, 0.7}});
    EXPECT_TRUE(v.pole);
    EXPECT_FALSE(v.value.has_value());
}

TEST(MaassSelberg, SignToggle) {
    const auto a = aff("A1affine");
    const auto s = with_central(a, -1.0);
    MSOptions opt;
    opt.sign = MSSign::positive;
    EXPECT_NEAR(ms_inner_product(a, {1.0, s, s, {0.0, 0.0}}, opt).value->real(), -0.5, 1e-15);
}

TEST(MaassSelberg, XiKernel) {
    const auto a = aff("A1affine");
    const auto mu = with_central(a, -1.0);
    const auto v = xi_kernel(a, 1.0, mu, mu, {0.0, 0.0});
    EXPECT_NEAR(v.value->real(), -0.5, 1e-15);
    const auto scaled = xi_kernel(a, 3.0, mu, mu, {0.0, 0.0});
    EXPECT_NEAR(scaled.value->real(), -1.5, 1e-15);
    EXPECT_TRUE(xi_kernel(a, 1.0, with_central(a, 1.0), with_central(a, -1.0), {0.0, 0.0}).pole);
    MSOptions h0;
    h0.xi_denominator = XiDenominator::h0;
    // Literal variant: denominator (mu + conj mu')(H0) = -1 for H0 = h_1.
    EXPECT_NEAR(xi_kernel(a, 1.0, mu, mu, {1.0, 0.0}, h0).value->real(), -std::exp(-1.0), 1e-15);
}

TEST(MaassSelberg, E6AgainstHighPrecision) {
    using boost::multiprecision::cpp_dec_float_50;
    const auto a = aff("E6affine");
    const auto nu = extend_from_central(a, Complex(-36.0, 0.0));
    const auto s = sigma(nu, a);
    std::vector<double> h0;
    for (auto x : central_coroot(a)) h0.push_back(static_cast<double>(x));
    const auto v = ms_inner_product(a, {1.0, s, s, h0});
    // sigma(h_i) = -2; (sigma + sigma)(H0) = (sigma + sigma)(c) = -4 * 12.
    const cpp_dec_float_50 expected = exp(cpp_dec_float_50(-48)) / cpp_dec_float_50(48);
    ASSERT_TRUE(v.value.has_value());
    EXPECT_GT(v.value->real(), 0.0);
    EXPECT_NEAR(v.value->real() / expected.convert_to<double>(), 1.0, 1e-13);
}

TEST(MaassSelberg, PositivityRandom) {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0), pos(0.1, 5.0);
    for (const auto& t : affine_catalog(4)) {
        const auto a = finite_cartan(t);
        for (int rep = 0; rep < 40; ++rep) {
            std::vector<Complex> vals(static_cast<std::size_t>(a.size()));
            for (auto& x : vals) x = u(rng);
            ComplexFunctional s(vals);
            const auto c = central_value(a, s).real();
            if (c >= -1e-3) continue;
            std::vector<double> h0(vals.size());
            for (auto& x : h0) x = u(rng);
            const auto v = ms_inner_product(a, {pos(rng), s, s, h0});
            ASSERT_TRUE(v.value.has_value());
            EXPECT_GT(v.value->real(), 0.0) << t.str();
        }
    }
}

TEST(MaassSelberg, ConjugateSymmetry) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const auto a = aff("B3affine");
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Complex> x(4), y(4);
        for (auto& v : x) v = {u(rng) - 1.0, u(rng)};
        for (auto& v : y) v = {u(rng) - 1.0, u(rng)};
        const std::vector<double> h0{u(rng), u(rng), u(rng), u(rng)};
        const Complex p{u(rng), u(rng)};
        const auto f = ms_inner_product(a, {p, ComplexFunctional(x), ComplexFunctional(y), h0});
        const auto g = ms_inner_product(a, {std::conj(p), ComplexFunctional(y), ComplexFunctional(x), h0});
        ASSERT_TRUE(f.value && g.value);
        EXPECT_NEAR(std::abs(*f.value - std::conj(*g.value)), 0.0, 1e-12 * std::abs(*f.value));
    }
}

TEST(MaassSelberg, CauchyRiemannInNu) {
    // Holomorphic in sigma: the derivative along a real and an imaginary step agree.
    const auto a = aff("A2affine");
    const std::vector<double> h0{0.3, -0.2, 0.5};
    const ComplexFunctional sp(std::vector<Complex>{{-1.0, 0.2}, {-0.7, -0.1}, {-1.2, 0.4}});
    const double h = 1e-5;
    for (double base : {-0.5, -1.0, -2.5}) {
        std::vector<Complex> x{{base, 0.3}, {base - 0.2, -0.4}, {base + 0.1, 0.1}};
        auto f = [&](Complex dz) {
            auto y = x;
            y[0] += dz;
            return *ms_inner_product(a, {1.0, ComplexFunctional(y), sp, h0}).value;
        };
        const Complex dx = (f({h, 0}) - f({-h, 0})) / (2 * h);
        const Complex dy = (f({0, h}) - f({0, -h})) / (2 * h);
        EXPECT_LT(std::abs(dx - dy / Complex(0, 1)), 1e-6 * std::max(1.0, std::abs(dx)));
    }
}

TEST(MaassSelberg, SimplePole) {
    const auto a = aff("A1affine");
    const std::vector<double> h0{0.4, 0.1};
    const auto sp = with_central(a, -1.0);
    std::vector<double> products;
    for (double eps : {1e-2, 1e-4, 1e-6, 1e-8}) {
        const auto s = with_central(a, 1.0 + eps);
        const auto v = ms_inner_product(a, {1.0, s, sp, h0});
        ASSERT_TRUE(v.value.has_value());
        products.push_back(std::abs(*v.value) * std::abs(v.denominator));
    }
    for (double p : products) EXPECT_NEAR(p, products.back(), 1e-2 * products.back());
    EXPECT_NEAR(products[2], products[3], 1e-6 * products[3]);
}

TEST(MaassSelberg, RegionScan) {
    const auto a = aff("A1affine");  // g = 2, rho(c) = 2
    std::vector<ComplexFunctional> nus;
    for (double c : {-9.0, -6.0, -3.0, -1.0}) nus.push_back(with_central(a, c));
    const auto r = region_scan(a, nus, nus, {0.1, 0.2});
    EXPECT_EQ(r.points.size(), 16u);
    EXPECT_EQ(r.poles_on_holomorphic_side, 0u);
    // sigma(c) + sigma'(c) = 0 exactly when nu(c) + nu'(c) = -4: pairs (-3, -1), (-1, -3).
    EXPECT_EQ(r.pole_count, 2u);
    for (const auto& p : r.points) EXPECT_EQ(p.value.pole, std::abs((p.sigma_c + std::conj(p.sigma_prime_c))) < 1e-12);
    EXPECT_TRUE(region_scan(a, {}, nus, {0.0, 0.0}).points.empty());
}
