#pragma once

// Values produced by the numpy scripts in tests/oracles/ and frozen here.
// Thresholds enforced by the tests are set from these runs.

namespace kuniv::oracle {

// approximation.py
inline constexpr double kGaussianSin3xAt25 = 8.774426399904556e-07;  // RKHS-norm ridge 1e-10
inline constexpr double kGaussianSin3xThreshold = 1e-3;
inline constexpr double kCosineFloorX2 = 0.821531311061784;  // LS over {cos x, sin x}
inline constexpr double kNlogExpX2At60 = 3.8639590661304624e-05;
inline constexpr double kNlogExpThreshold = 1e-2;
inline constexpr double kMuntzFullCos2x = 4.279263055018134e-09;
inline constexpr double kMuntzFullThreshold = 1e-2;
inline constexpr double kMuntzLacunaryX3Floor = 0.3970050000004489;
inline constexpr double kEvenHarmonic1000 = 3.3964117149952626;
inline constexpr double kOddHarmonic1000 = 4.089059145555083;

// closed_forms.py
inline constexpr double kGaussianGramEig[3] = {0.2072388, 0.86466472, 1.92809648};
inline constexpr double kGaussianK01 = 0.6065306597126334;
inline constexpr double kGaussianEmbedDiff = 0.3934693402873666;
inline constexpr double kGaussianMmdDirac01 = 0.7869386805747332;

// witness.py at T = 1200, grid 24001
inline constexpr double kWitnessMass = 4.444e-10;
inline constexpr double kWitnessMaxFourier = 2.695e-10;
inline constexpr double kWitnessMaxEmbed = 4.896e-13;
inline constexpr double kWitnessTotalVariation = 1.4400;

}  // namespace kuniv::oracle
