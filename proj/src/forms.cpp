#include "quadrep/forms.hpp"

namespace quadrep {

i128 eval_form(const FormParams& p, bool halved, i64 x) {
    i128 inner = checked_add128(checked_mul128(i128(p.a), i128(x)), i128(p.b));
    i128 v = checked_mul128(i128(x), inner);
    if (!halved) return v;
    if (v % 2 != 0)
        throw std::invalid_argument("eval_form: x(ax+b) is odd, halved value not integral (a=" +
                                    std::to_string(p.a) + " b=" + std::to_string(p.b) +
                                    " x=" + std::to_string(x) + ")");
    return v / 2;
}

std::pair<FormParams, bool> polygonal_params(const PolygonalKind& kind) {
    if (kind.m < 3) throw std::invalid_argument("polygonal_params: m must be at least 3");
    switch (kind.variant) {
        case PolygonalVariant::Second:
            return {FormParams(kind.m - 2, kind.m - 4), true};
        case PolygonalVariant::Standard:
        case PolygonalVariant::Generalized:
            return {FormParams(kind.m - 2, -(kind.m - 4)), true};
    }
    throw std::logic_error("polygonal_params: unreachable");
}

}  // namespace quadrep
