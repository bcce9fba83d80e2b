#include <sstream>
#include <string>

#include "binary_io.hpp"
#include "fpl/collision_kernel.hpp"

namespace fpl {

namespace {

constexpr std::uint32_t kTensorFormatVersion = 1;

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void save_tensor(const CollisionTensor& tensor, std::ostream& out) {
    detail::ByteWriter w;
    w.magic("FPLC");
    w.u32(kTensorFormatVersion);
    w.f64(tensor.params.gamma);
    w.f64(tensor.params.lambda);
    w.u32(static_cast<std::uint32_t>(tensor.M0));
    w.u32(tensor.ordering);
    w.u64(tensor.entries.size());
    for (const auto& e : tensor.entries) {
        w.u32(e.alpha);
        w.u32(e.lambda);
        w.u32(e.kappa);
        w.f64(e.value);
    }
    w.finish(out);
}

CollisionTensor load_tensor(std::istream& in, const TensorExpectation& expect) {
    detail::ByteReader r(in);
    r.expect_magic("FPLC");
    if (const auto version = r.u32(); version != kTensorFormatVersion)
        throw FormatError("unsupported cache version " + std::to_string(version));
    CollisionTensor t;
    t.params.gamma = r.f64();
    t.params.lambda = r.f64();
    t.M0 = static_cast<int>(r.u32());
    t.ordering = r.u32();
    if (t.ordering != kGradedLexOrdering) throw FormatError("unknown index ordering " + std::to_string(t.ordering));
    if (t.M0 < 2 || t.M0 > kMaxDegree) throw FormatError("cache M0 out of range");

    if (expect.gamma && *expect.gamma != t.params.gamma)
        throw CompatibilityError("cache built for gamma=" + describe(t.params.gamma) + ", requested " +
                                 describe(*expect.gamma));
    if (expect.lambda && *expect.lambda != t.params.lambda)
        throw CompatibilityError("cache built for lambda=" + describe(t.params.lambda) + ", requested " +
                                 describe(*expect.lambda));
    if (expect.M0 && *expect.M0 != t.M0)
        throw CompatibilityError("cache built for M0=" + std::to_string(t.M0) + ", requested " +
                                 std::to_string(*expect.M0));

    const auto count = r.u64();
    if (count * 20 != r.remaining()) throw FormatError("entry count does not match payload size");
    const auto n = static_cast<std::uint32_t>(index_set_size(t.M0));
    t.entries.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        TensorEntry e{};
        e.alpha = r.u32();
        e.lambda = r.u32();
        e.kappa = r.u32();
        e.value = r.f64();
        if (e.alpha >= n || e.lambda >= n || e.kappa >= n) throw FormatError("entry rank outside I_M0");
        t.entries.push_back(e);
    }
    return t;
}

}  // namespace fpl
