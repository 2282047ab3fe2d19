// reference_values.hpp — frozen 40-digit reference constants
// Regenerate with oracle/make_refs.py; do not edit by hand.
#pragma once

namespace qotto::refs {

constexpr double kHotGround = 0.57444251681165899;
constexpr double kHotExcited = 0.42555748318834101;
constexpr double kColdGround = 0.81757447619364366;
constexpr double kColdExcited = 0.18242552380635634;

constexpr double kF1 = 1.0000000000000000;
constexpr double kDeltaP1 = 0.24313195938198467;
constexpr double kW1 = 0.12156597969099234;
constexpr double kQh1 = 0.24313195938198467;
constexpr double kQc1 = -0.12156597969099234;
constexpr double kCat1_0 = 1.0000000000000000;

constexpr double kF2 = 2.7047666015118656;
constexpr double kDeltaP2 = 0.056550593019399136;
constexpr double kW2 = 0.084825889529098704;
constexpr double kQh2 = 0.11310118603879827;
constexpr double kQc2 = -0.028275296509699568;
constexpr double kCat2_0 = 0.35638874729203467;
constexpr double kCat2_1 = 0.64361125270796533;

constexpr double kF3 = 4.7396305581639612;
constexpr double kDeltaP3 = 0.018177002512057817;
constexpr double kW3 = 0.045442506280144542;
constexpr double kQh3 = 0.054531007536173450;
constexpr double kQc3 = -0.0090885012560289083;
constexpr double kCat3_0 = 0.19774551475318178;
constexpr double kCat3_1 = 0.31917255962460233;
constexpr double kCat3_2 = 0.48308192562221589;

constexpr double kWideW1 = 0.0019984845624925125;
constexpr double kWideW2 = 0.0049147738020468833;

}  // namespace qotto::refs
