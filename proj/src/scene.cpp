// SPDX-License-Identifier: Apache-2.0
#include "matris/scene.hpp"

namespace matris {

MaRegion SceneConfig::region() const
{
    MaRegion r;
    r.center = region_center;
    r.side_length = side_length_over_lambda * rf().wavelength();
    r.samples_per_axis = samples_per_axis;
    r.orientation = orientation;
    return r;
}

void SceneConfig::validate() const
{
    (void)rf();
    (void)tris();
    region().validate();
    user.validate();
    budget.validate();
}

} // namespace matris
