#include "ladder.hpp"

#include "errors.hpp"

namespace lenard {

Ladder ladder_generate(const Functional& seed, const Characteristics& generator, int depth,
                       std::string model) {
    generator.require_role(Role::Vector);
    if (depth < 0) throw Error(Errc::InvalidArgument, "ladder depth must be nonnegative");
    if (generator.dim() != seed.comps())
        throw Error(Errc::InvalidArgument, "generator dimension does not match seed");
    Ladder ladder{std::move(model), generator, {seed}};
    ladder.entries.reserve(depth + 1);
    for (int i = 0; i < depth; ++i)
        ladder.entries.push_back(lie_derivative(generator, ladder.entries.back()));
    return ladder;
}

OrbitValue orbit_eval(const Ladder& ladder, const Rat& z) {
    Functional total = Functional::zero(ladder.entries.front().comps());
    Rat weight(1);
    for (std::size_t i = 0; i < ladder.entries.size(); ++i) {
        if (i > 0) weight *= z / Rat(static_cast<long>(i));
        total = total + ladder.entries[i].scaled(weight);
    }
    return OrbitValue{total, ladder.depth()};
}

InvolutivityReport involutivity_report(const Ladder& ladder, const PoissonOp& w) {
    InvolutivityReport report;
    report.model = ladder.model;
    report.depth = ladder.depth();
    report.pass = true;
    for (int k = 0; k <= report.depth; ++k) {
        for (int m = k + 1; m <= report.depth; ++m) {
            Functional residual = bracket(ladder.entries[k], ladder.entries[m], w);
            PairCheck check;
            check.k = k;
            check.m = m;
            check.zero = residual.is_zero();
            if (!check.zero) {
                check.residual = residual.density().str();
                report.pass = false;
            }
            report.pairs.push_back(std::move(check));
        }
    }
    return report;
}

}  // namespace lenard
