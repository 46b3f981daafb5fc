#include "chamber_orbits/reference.hpp"

namespace chamber_orbits {

IntegerPolynomial poly_from_roots(const std::vector<Integer>& roots) {
    IntegerPolynomial p = IntegerPolynomial::constant(1);
    for (const Integer& r : roots) p = p * IntegerPolynomial::linear(-r, 1);
    return p;
}

IntegerPolynomial catalan_characteristic_polynomial(int m) {
    if (m < 1)
        throw std::invalid_argument(
            "catalan_characteristic_polynomial: m must be positive");
    std::vector<Integer> roots;
    for (int r = m + 1; r <= 2 * m - 1; ++r) roots.emplace_back(r);
    return poly_from_roots(roots);
}

namespace {

IntegerPolynomial from_coeffs(std::vector<long long> ascending) {
    std::vector<Integer> c(ascending.begin(), ascending.end());
    return IntegerPolynomial(std::move(c));
}

std::vector<ReferenceEntry> build_table() {
    std::vector<ReferenceEntry> t;
    const auto add = [&t](Family f, int m, IntegerPolynomial chi, Integer chambers,
                          Integer quotient) {
        t.push_back({f, m, std::move(chi), std::move(chambers), std::move(quotient)});
    };
    const auto roots = [](std::vector<long long> r) {
        return poly_from_roots(std::vector<Integer>(r.begin(), r.end()));
    };

    for (int m = 2; m <= 7; ++m)
        add(Family::catalan, m, catalan_characteristic_polynomial(m),
            falling_product(m), catalan(m));

    add(Family::restricted_all_subset, 3, roots({1, 5}), 12, 2);
    add(Family::restricted_all_subset, 4, roots({1, 5, 7}), 96, 4);
    add(Family::restricted_all_subset, 5, roots({1, 7, 8, 9}), 1440, 12);
    add(Family::restricted_all_subset, 6, roots({1, 7, 11, 13, 14}), 40320, 56);
    add(Family::restricted_all_subset, 7, roots({1, 11, 13, 17, 19, 23}), 2903040,
        576);
    add(Family::restricted_all_subset, 8, roots({1, 19, 23, 25, 27, 29, 31}),
        670924800, 16640);
    add(Family::restricted_all_subset, 9,
        roots({1}) * from_coeffs({-260558129500, 41492561354, -2855339970,
                                  110142669, -2573760, 36456, -290, 1}),
        610037568000LL, 1681100);

    add(Family::unrestricted_all_subset, 3, roots({1, 4, 5}), 60, 10);
    add(Family::unrestricted_all_subset, 4, roots({1, 5, 7, 8}), 864, 36);
    add(Family::unrestricted_all_subset, 5, roots({1, 7, 9, 11, 13}), 26880, 224);
    add(Family::unrestricted_all_subset, 6, roots({1, 11, 13, 17, 17, 19}), 2177280,
        3024);
    add(Family::unrestricted_all_subset, 7,
        roots({1, 19, 23}) * from_coeffs({510834, -75180, 4190, -105, 1}),
        566697600, 112440);

    add(Family::mid_hyperplane, 4, roots({1, 3, 5}), 48, 2);
    add(Family::mid_hyperplane, 5, roots({1, 7, 8, 9}), 1440, 12);
    add(Family::mid_hyperplane, 6, roots({1, 13, 14, 15, 17}), 120960, 168);
    add(Family::mid_hyperplane, 7, roots({1, 23, 24, 25, 26, 27}), 23587200, 4680);
    add(Family::mid_hyperplane, 8,
        roots({1, 35, 37, 39, 41}) * from_coeffs({1926, -85, 1}), 9248117760LL,
        229368);
    add(Family::mid_hyperplane, 9,
        roots({1}) * from_coeffs({-2972902161600, 336081719070, -16393719797,
                                  447514669, -7387310, 73780, -413, 1}),
        6651665153280LL, 18330206);
    add(Family::mid_hyperplane, 10,
        roots({1}) * from_coeffs({3732690616086600, -321989533359786,
                                  12315189583899, -272839984046, 3830348179,
                                  -34896134, 201481, -674, 1}),
        8134544088921600LL, 2241662282LL);

    add(Family::signed_all_subset, 3, roots({1, 5, 7}), 96, 2);
    add(Family::signed_all_subset, 4, roots({1, 11, 13, 15}), 5376, 14);
    add(Family::signed_all_subset, 5,
        roots({1, 29, 31}) * from_coeffs({971, -60, 1}), 1981440, 516);
    add(Family::signed_all_subset, 6,
        roots({1}) * from_coeffs({-2691439347, 165591769, -4182690, 54310, -363, 1}),
        5722536960LL, 124187);

    return t;
}

}  // namespace

const std::vector<ReferenceEntry>& reference_table() {
    static const std::vector<ReferenceEntry> table = build_table();
    return table;
}

const ReferenceEntry* reference_lookup(Family family, int m) {
    for (const ReferenceEntry& e : reference_table())
        if (e.family == family && e.m == m) return &e;
    return nullptr;
}

}  // namespace chamber_orbits
