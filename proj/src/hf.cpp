#include "todim/hf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "todim/errors.hpp"

namespace todim {

HfElement::HfElement(std::vector<double> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw Error(ErrorKind::EmptyElement, "hesitant element has no degrees");
    for (double d : degrees_)
        if (!(d >= 0.0)) throw Error(ErrorKind::NegativeDegree, "degree " + std::to_string(d) + " is negative");
}

double HfElement::max_degree() const noexcept { return *std::max_element(degrees_.begin(), degrees_.end()); }

double hf_score(const HfElement& e) {
    double sum = 0.0;
    for (double d : e.degrees()) sum += d;
    return sum / static_cast<double>(e.size());
}

double hf_variance(const HfElement& e) {
    const double mean = hf_score(e);
    double sq = 0.0;
    for (double d : e.degrees()) sq += (d - mean) * (d - mean);
    return std::sqrt(sq) / static_cast<double>(e.size());
}

Ordering hf_compare(const HfElement& a, const HfElement& b) {
    const double sa = hf_score(a), sb = hf_score(b);
    if (sa > sb + kTieTolerance) return Ordering::Greater;
    if (sb > sa + kTieTolerance) return Ordering::Less;
    const double va = hf_variance(a), vb = hf_variance(b);
    if (va + kTieTolerance < vb) return Ordering::Greater;
    if (vb + kTieTolerance < va) return Ordering::Less;
    return Ordering::Equal;
}

HfElement hf_pad(const HfElement& e, std::size_t target_count) {
    if (target_count < e.size())
        throw Error(ErrorKind::TargetTooSmall, "cannot pad " + std::to_string(e.size()) + " degrees down to " +
                                                   std::to_string(target_count));
    std::vector<double> out(e.degrees().begin(), e.degrees().end());
    out.resize(target_count, e.max_degree());
    return HfElement(std::move(out));
}

double hf_distance(const HfElement& a, const HfElement& b, std::size_t width) {
    const std::size_t n = width == 0 ? std::max(a.size(), b.size()) : width;
    auto lhs = hf_pad(a, n);
    auto rhs = hf_pad(b, n);
    std::vector<double> x(lhs.degrees().begin(), lhs.degrees().end());
    std::vector<double> y(rhs.degrees().begin(), rhs.degrees().end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double sum = 0.0;
    for (std::size_t t = 0; t < n; ++t) sum += std::abs(x[t] - y[t]);
    return sum / static_cast<double>(n);
}

}  // namespace todim
