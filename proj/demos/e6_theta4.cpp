// Walks through the E6 affine example: Levi type of theta_4, the obstruction
// to self-associativity, and the Godement thresholds on nu(c).
#include <iostream>

#include <loopeis/loopeis.hpp>

int main() {
    using namespace loopeis;
    const auto a = finite_cartan(TypeLabel::parse("E6affine"));
    std::cout << "Cartan matrix of " << a.name() << ":\n";
    for (const auto& row : a.entries().to_rows()) {
        for (auto x : row) std::cout << (x < 0 ? " " : "  ") << x;
        std::cout << '\n';
    }

    const auto g = dual_coxeter(a.finite_part());
    std::cout << "dual Coxeter number g = " << g << '\n';

    const auto theta = ParabolicSubset::maximal(a, 4);
    std::cout << "Levi type of theta_4: " << levi_type(theta).str() << '\n';

    const auto verdict = constant_term_is_trivial(theta, 12);
    std::cout << verdict.explanation() << '\n';
    const auto& cert = verdict.certificate;
    if (cert.obstruction)
        std::cout << "w0(theta) word length " << cert.obstruction->w0_theta.length() << ", alpha_4 coefficient "
                  << cert.obstruction->removed_coefficient << ", elements searched " << cert.elements_searched << '\n';

    // Uniform functionals nu(h_i) = t, so nu(c) = 12 t.
    for (double c : {-30.0, -18.0, -12.0, -6.0}) {
        const auto nu = LinearFunctional<double>::constant(7, c / 12.0);
        std::cout << "nu(c) = " << c << ": " << to_string(godement_cuspidal(a, nu).region) << '\n';
    }
}
