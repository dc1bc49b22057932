#include "zetaconst/constants.hpp"

#include <cmath>

namespace zetaconst {

double ConstantRef::uncertainty() const { return std::pow(10.0, -fractional_digits); }

namespace {

std::vector<ConstantRef> build_registry() {
    using P = Provenance;
    return {
        {"gamma", "0.5772156649", P::paper, 10},
        {"gamma1", "-0.07281584548", P::paper, 11},
        {"gamma2", "-0.009690363192", P::paper, 12},
        {"delta1", "-0.08106146679", P::paper, 11},
        {"delta2", "-0.006356455908", P::paper, 12},
        {"delta3", "0.004711166862", P::paper, 12},
        {"kappa1", "0.5290529699", P::paper, 10},
        {"pi", "3.14159265358979323846264338327950288419716939937511", P::derived_oracle, 50},
        {"ln2pi", "1.83787706640934548356065947281123527972279494727557", P::derived_oracle, 50},
        {"zeta2", "1.64493406684822643647241516664602518921894990120680", P::derived_oracle, 50},
        {"zeta3", "1.20205690315959428539973816151144999076498629234050", P::derived_oracle, 50},
    };
}

}  // namespace

const std::vector<ConstantRef>& reference_all() {
    static const std::vector<ConstantRef> registry = build_registry();
    return registry;
}

const ConstantRef& reference(std::string_view name) {
    for (const auto& c : reference_all())
        if (c.name == name) return c;
    throw UnknownConstantError(std::string(name));
}

}  // namespace zetaconst
