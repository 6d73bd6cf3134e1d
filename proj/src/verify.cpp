#include "syt/verify.hpp"

#include <algorithm>

#include "syt/laurent.hpp"
#include "syt/oracle.hpp"
#include "syt/vertexdp.hpp"

namespace syt {

VerifyReport run_verification(long max_n, std::size_t max_r, long dft_max_n,
                              const DftOptions& opts) {
    VerifyReport report;
    report.max_n = max_n;
    report.max_r = max_r;
    report.dft_max_n = dft_max_n;
    report.dft_mode = opts.mode;

    for (long n = 0; n <= max_n; ++n) {
        for (const Partition& shape : partitions_of(n, max_r)) {
            const std::size_t r = std::max<std::size_t>(shape.height(), 1);
            ShapeRecord rec;
            rec.shape = shape;
            rec.values.push_back({Method::dp, count_paths(shape, r).count});
            rec.values.push_back({Method::genfun, count_via_genfun(shape, r)});
            rec.values.push_back({Method::closed, count_closed(shape, r).value});
            if (n <= kOracleCellCap)
                rec.values.push_back({Method::oracle, count_oracle(shape)});
            if (shape.height() <= 2)
                rec.values.push_back(
                    {Method::tworow, count_two_row(shape.part(0), shape.part(1)).value});
            if (shape.height() <= 3 && n <= std::min(dft_max_n, opts.max_cells))
                rec.values.push_back({Method::dft, count_dft(shape, opts).rounded});

            for (const MethodValue& mv : rec.values)
                if (mv.value != rec.values.front().value) rec.agree = false;
            if (!rec.agree) {
                std::string detail;
                for (const MethodValue& mv : rec.values) {
                    if (!detail.empty()) detail += ", ";
                    detail += std::string(method_name(mv.method)) + "=" + to_decimal(mv.value);
                }
                report.disagreements.push_back({shape, detail});
            }
            report.records.push_back(std::move(rec));
        }
    }

    for (long side = 0; side <= 4; ++side) {
        const DftGrid verbatim = initial_state_verbatim(side);
        const DftGrid derived = initial_state_derived(side);
        double worst = 0.0;
        for (long w1 = 0; w1 < verbatim.rows(); ++w1)
            for (long w2 = 0; w2 < verbatim.cols(); ++w2)
                worst = std::max(worst, std::abs(verbatim.at(w1, w2) - derived.at(w1, w2)));
        report.start_mode_diffs.emplace_back(side, worst);
    }
    return report;
}

} // namespace syt
