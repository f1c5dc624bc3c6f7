#include "rmt/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rmt {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kPiL = 3.14159265358979323846264338327950288L;
constexpr long double kTwoPiE = 2.0L * kPiL * 2.71828182845904523536028747135266250L;

bool parse_double(std::string_view sv, double& out) {
    // trim trailing CR / spaces
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
        sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty()) return false;
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), out);
    return ec == std::errc() && p == sv.data() + sv.size();
}

long double parse_big_integer(std::string_view sv, long line_no) {
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
    if (sv.empty()) throw DataError("empty base value", line_no);
    long double v = 0.0L;
    bool neg = false;
    std::size_t i = 0;
    if (sv[0] == '-') { neg = true; i = 1; }
    if (i == sv.size()) throw DataError("malformed base integer", line_no);
    for (; i < sv.size(); ++i) {
        if (sv[i] < '0' || sv[i] > '9')
            throw DataError("malformed base integer", line_no);
        v = v * 10.0L + (sv[i] - '0');
    }
    return neg ? -v : v;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<double> make_edges(double s_max, double bin_width, std::size_t nbins) {
    std::vector<double> e(nbins + 1);
    for (std::size_t i = 0; i <= nbins; ++i)
        e[i] = std::min(bin_width * static_cast<double>(i), s_max);
    return e;
}

}  // namespace

ZerosDataset load_zeros(const std::filesystem::path& path, ZerosFormat format) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open " + path.string());
    ZerosDataset ds;
    std::string line;
    long line_no = 0;
    bool expect_base = (format == ZerosFormat::BaseOffset);
    while (std::getline(in, line)) {
        ++line_no;
        if (expect_base) {
            if (line.rfind("base", 0) != 0)
                throw DataError("BaseOffset file must start with 'base <integer>'",
                                line_no);
            std::string digits = line.substr(4);
            while (!digits.empty() && (digits.front() == ' ' || digits.front() == '\t'))
                digits.erase(digits.begin());
            while (!digits.empty() && (digits.back() == '\r' || digits.back() == ' '))
                digits.pop_back();
            ds.base = parse_big_integer(digits, line_no);
            ds.base_digits = digits;
            expect_base = false;
            continue;
        }
        if (line.empty() || line == "\r") continue;
        double v;
        if (!parse_double(line, v))
            throw DataError("malformed number '" + line + "'", line_no);
        if (!ds.offsets.empty() && !(v > ds.offsets.back()))
            throw DataError("entries must be strictly increasing", line_no);
        ds.offsets.push_back(v);
    }
    if (expect_base)
        throw DataError("BaseOffset file is missing its base line", 1);
    return ds;
}

UnfoldedSequence unfold(const ZerosDataset& ds) {
    if (ds.count() < 2)
        throw PreconditionError("unfold needs at least 2 heights");
    const long double e0 = ds.first_height();
    if (!(e0 > kTwoPiE))
        throw DomainError("heights must exceed 2*pi*e for the density formula");
    UnfoldedSequence seq;
    seq.first_height = e0;
    seq.rho_bar = static_cast<double>(std::log(e0 / kTwoPiE) / (2.0L * kPiL));
    seq.points.reserve(ds.count());
    const double off0 = ds.offsets.front();
    for (double off : ds.offsets)
        seq.points.push_back(seq.rho_bar * (off - off0));
    return seq;
}

double thin_u01(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 stream: state = seed + (index+1) * gamma, finalized
    const std::uint64_t z =
        splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

UnfoldedSequence thin(const UnfoldedSequence& seq, ThinningParam xi,
                      std::uint64_t seed) {
    UnfoldedSequence out;
    out.rho_bar = seq.rho_bar;
    out.first_height = seq.first_height;
    out.meta.thinned = true;
    out.meta.seed = seed;
    out.meta.xi_effective = seq.meta.xi_effective * xi.xi;
    out.points.reserve(seq.points.size());
    for (std::size_t i = 0; i < seq.points.size(); ++i)
        if (thin_u01(seed, i) < xi.xi) out.points.push_back(seq.points[i]);
    return out;
}

TwoPointAccumulator::TwoPointAccumulator(double s_max, double bin_width, int window,
                                         double rescale_factor)
    : s_max_(s_max), bin_width_(bin_width), rescale_(rescale_factor),
      window_(window) {
    if (window < 1) throw ArgumentError("window must be >= 1");
    if (!(bin_width > 0) || !(s_max > bin_width))
        throw ArgumentError("bad two-point binning");
    ring_.assign(static_cast<std::size_t>(window), 0.0);
    counts_.assign(static_cast<std::size_t>(std::ceil(s_max / bin_width)), 0);
}

void TwoPointAccumulator::feed(double p) {
    const std::uint64_t avail =
        std::min<std::uint64_t>(seen_, static_cast<std::uint64_t>(window_));
    for (std::uint64_t k = 1; k <= avail; ++k) {
        const double q = ring_[static_cast<std::size_t>((seen_ - k) % window_)];
        const double gap = (p - q) * rescale_;
        if (gap >= s_max_) break;  // ring is ordered: older points only grow the gap
        const auto bin = static_cast<std::size_t>(gap / bin_width_);
        if (bin < counts_.size()) ++counts_[bin];
    }
    ring_[static_cast<std::size_t>(seen_ % window_)] = p;
    ++seen_;
}

EmpiricalCurve TwoPointAccumulator::finish(double mean_spacing_hint) const {
    EmpiricalCurve c;
    c.bin_width = bin_width_;
    c.bin_edges = make_edges(s_max_, bin_width_, counts_.size());
    c.counts = counts_;
    c.n_ref = static_cast<long long>(seen_);
    c.coverage_warning = (window_ * mean_spacing_hint <= s_max_);
    c.values.resize(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i)
        c.values[i] = seen_ ? static_cast<double>(counts_[i]) /
                                  (static_cast<double>(c.n_ref) * bin_width_)
                            : 0.0;
    return c;
}

NNSpacingAccumulator::NNSpacingAccumulator(double s_max, double bin_width,
                                           double rescale_factor)
    : s_max_(s_max), bin_width_(bin_width), rescale_(rescale_factor) {
    if (!(bin_width > 0) || !(s_max > bin_width))
        throw ArgumentError("bad spacing binning");
    counts_.assign(static_cast<std::size_t>(std::ceil(s_max / bin_width)), 0);
}

void NNSpacingAccumulator::feed(double p) {
    if (have_prev_) {
        const double gap = (p - prev_) * rescale_;
        ++n_gaps_;
        if (gap < s_max_) {
            const auto bin = static_cast<std::size_t>(gap / bin_width_);
            if (bin < counts_.size()) ++counts_[bin];
        }
    }
    prev_ = p;
    have_prev_ = true;
}

EmpiricalCurve NNSpacingAccumulator::finish() const {
    EmpiricalCurve c;
    c.bin_width = bin_width_;
    c.bin_edges = make_edges(s_max_, bin_width_, counts_.size());
    c.counts = counts_;
    c.n_ref = static_cast<long long>(n_gaps_);
    c.values.resize(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i)
        c.values[i] = n_gaps_ ? static_cast<double>(counts_[i]) /
                                    (static_cast<double>(n_gaps_) * bin_width_)
                              : 0.0;
    return c;
}

EmpiricalCurve empirical_two_point(const UnfoldedSequence& seq, double s_max,
                                   double bin_width, int window,
                                   bool rescale_to_unit_density) {
    TwoPointAccumulator acc(s_max, bin_width, window,
                            rescale_to_unit_density ? seq.meta.xi_effective : 1.0);
    for (double p : seq.points) acc.feed(p);
    double mean_spacing = 1.0;
    if (seq.points.size() > 1)
        mean_spacing = (seq.points.back() - seq.points.front()) /
                       static_cast<double>(seq.points.size() - 1);
    if (rescale_to_unit_density) mean_spacing *= seq.meta.xi_effective;
    return acc.finish(mean_spacing);
}

EmpiricalCurve empirical_nn_spacing(const UnfoldedSequence& seq, double s_max,
                                    double bin_width, bool rescale_to_unit_density) {
    NNSpacingAccumulator acc(s_max, bin_width,
                             rescale_to_unit_density ? seq.meta.xi_effective : 1.0);
    for (double p : seq.points) acc.feed(p);
    return acc.finish();
}

TheoryParams TheoryParams::for_height(long double E) {
    if (!(E > kTwoPiE)) throw DomainError("height too small for theory parameters");
    TheoryParams p;
    p.E = static_cast<double>(E);
    p.rho_bar = static_cast<double>(std::log(E / kTwoPiE) / (2.0L * kPiL));
    const double logE2pi = static_cast<double>(std::log(E / (2.0L * kPiL)));
    p.alpha = 1.0 + p.Q_over_Lambda / logE2pi;
    p.N_eff = logE2pi / std::sqrt(12.0 * p.Lambda);
    return p;
}

TwoPointTheory theory_two_point(const TheoryParams& params, ThinningParam xi,
                                double s) {
    if (s < 0) throw DomainError("separation must be nonnegative");
    const double sp = s / xi.xi;
    const double sinc = (sp == 0.0) ? 1.0 : std::sin(kPi * sp) / (kPi * sp);
    const double amp = params.Lambda / (kPi * kPi * params.rho_bar * params.rho_bar);
    const double osc = std::sin(kPi * params.alpha * sp);
    TwoPointTheory t;
    t.correction_only = -amp * osc * osc;
    t.full = 1.0 - sinc * sinc + t.correction_only;
    return t;
}

ResidualReport compare(const EmpiricalCurve& curve, std::span<const double> theory) {
    if (theory.size() != curve.values.size())
        throw ArgumentError("curve and theory lengths differ");
    ResidualReport rep;
    rep.residual.resize(theory.size());
    rep.standard_error.resize(theory.size());
    double sumsq = 0.0;
    for (std::size_t i = 0; i < theory.size(); ++i) {
        rep.residual[i] = curve.values[i] - theory[i];
        const double cnt = std::max<double>(1.0, static_cast<double>(curve.counts[i]));
        rep.standard_error[i] =
            std::sqrt(cnt) / (static_cast<double>(curve.n_ref) * curve.bin_width);
        rep.max_abs_over_stderr = std::max(
            rep.max_abs_over_stderr, std::abs(rep.residual[i]) / rep.standard_error[i]);
        sumsq += rep.residual[i] * rep.residual[i];
    }
    rep.rms_residual = std::sqrt(sumsq / static_cast<double>(theory.size()));
    return rep;
}

void write_points_header(std::ostream& os, const UnfoldedSequence& seq) {
    char buf[160];
    os << "# unfolded-points 1\n";
    std::snprintf(buf, sizeof buf, "# rho_bar %.17g\n", seq.rho_bar);
    os << buf;
    {
        std::ostringstream e0;
        e0.precision(25);
        e0 << seq.first_height;
        os << "# e0 " << e0.str() << "\n";
    }
    std::snprintf(buf, sizeof buf, "# xi_effective %.17g\n", seq.meta.xi_effective);
    os << buf;
    os << "# seed " << seq.meta.seed << "\n";
    os << "# thinned " << (seq.meta.thinned ? 1 : 0) << "\n";
}

PointsHeader read_points_header(std::istream& is, long& line_no) {
    PointsHeader h;
    while (is.peek() == '#') {
        std::string line;
        std::getline(is, line);
        ++line_no;
        std::istringstream ss(line);
        std::string hash, key;
        ss >> hash >> key;
        if (key == "rho_bar") ss >> h.rho_bar;
        else if (key == "e0") {
            std::string digits;
            ss >> digits;
            h.e0_digits = digits;
            h.e0 = std::strtold(digits.c_str(), nullptr);
        } else if (key == "xi_effective") ss >> h.xi_effective;
        else if (key == "seed") ss >> h.seed;
        else if (key == "thinned") { int t = 0; ss >> t; h.thinned = t != 0; }
    }
    return h;
}

std::uint64_t stream_points(std::istream& is, long& line_no,
                            const std::function<void(double, std::uint64_t)>& fn) {
    std::string line;
    std::uint64_t idx = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        double v;
        if (!parse_double(line, v))
            throw DataError("malformed point '" + line + "'", line_no);
        fn(v, idx++);
    }
    return idx;
}

}  // namespace rmt
