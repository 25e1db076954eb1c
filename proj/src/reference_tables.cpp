#include "lmcost/reference_tables.hpp"

#include "lmcost/errors.hpp"

#include <string>

namespace lmcost::reference {
namespace {

constexpr std::optional<double> none = std::nullopt;

const ValleyRow kTable1[] = {
    {150, 1.224, 1.194, 0.03, 2.45098, none},
    {500, 2.236, 2.038, 0.198, 8.855098, none},
    {1000, 3.16, 2.718, 0.442, 13.98734, 1.98},
    {2500, 5, 3.906, 1.094, 21.88, 2.195},
    {5000, 7.071, 5.087, 1.984, 28.05827, 2.288},
    {7500, 8.66, 5.932, 2.728, 31.50115, 2.327},
    {10000, 10, 6.577, 3.423, 34.23, 2.3485},
    {15000, 12.24, 7.625, 4.615, 37.70425, 2.35},
    {50000, 22.36, 11.79, 10.57, 47.27191, 2.37},
};

const ValleyRow kTable2[] = {
    {150, 2.448, 2.201, 0.247, 10.08987, 1.45},
    {500, 4.472, 3.587, 0.885, 19.7898, 2.16},
    {1000, 6.32, 4.679, 1.641, 25.96519, 2.265},
    {2500, 10, 6.577, 3.423, 34.23, 2.3484},
    {5000, 14.142, 8.509, 5.633, 39.83171, 2.3862},
    {7500, 17.32, 9.779, 7.541, 43.53926, 2.402},
    {10000, 20, 10.85, 9.15, 45.75, 2.4126},
    {15000, 24.48, 12.65, 11.83, 48.32516, 2.4161},
    {50000, 44.72, 19.01, 25.71, 57.49106, 2.4563},
};

const ValleyRow kTable3[] = {
    {150, 3.672, 3.069, 0.603, 16.42157, 2.0392},
    {500, 6.708, 4.889, 1.819, 27.11688, 2.2755},
    {1000, 9.48, 6.33, 3.15, 33.22785, 2.3307},
    {2500, 15, 8.852, 6.148, 40.98667, 2.3913},
    {5000, 21.213, 11.33, 9.883, 46.58936, 2.4161},
    {7500, 25.98, 13.24, 12.74, 49.03772, 2.427},
    {10000, 30, 14.79, 15.21, 50.7, 2.4338},
    {15000, 36.72, 16.72, 20, 54.46623, 2.4344},
    {50000, 67.08, 25.43, 41.65, 62.09004, 2.456},
};

const ValleyRow kTable4[] = {
    {150, 11.016, 7.07, 3.946, 35.82062, 2.3533},
    {500, 20.124, 10.9, 9.224, 45.83582, 2.402},
    {1000, 28.44, 14.23, 14.21, 49.96484, 2.4227},
    {2500, 45, 19.09, 25.91, 57.57778, 2.4485},
    {5000, 63.639, 24.44, 39.199, 61.59588, 2.4553},
    {7500, 77.94, 28.55, 49.39, 63.36926, 2.4585},
    {10000, 90, 32.01, 57.99, 64.43333, 2.4608},
    {15000, 110.16, 37.81, 72.35, 65.6772, 2.4563},
    {50000, 201.24, 63.93, 137.31, 68.23196, 2.4708},
};

const ValleyRow kTable5[] = {
    {1.5, 0.367423, 0.3674, 2.34614E-05, 0.006385, none},
    {2.5, 0.474342, 0.4743, 4.1649E-05, 0.00878, none},
    {3.5, 0.561249, 0.561, 0.000248608, 0.044296, none},
    {4.5, 0.636396, 0.6356, 0.000796103, 0.125096, none},
    {5.5, 0.703562, 0.7019, 0.001662364, 0.236278, none},
    {6.5, 0.764853, 0.7619, 0.002952927, 0.386078, none},
    {7.5, 0.821584, 0.817, 0.004583836, 0.557927, none},
    {8.5, 0.874643, 0.8681, 0.006542784, 0.748052, none},
    {9.5, 0.924662, 0.916, 0.0086621, 0.936785, none},
    {10.5, 0.972111, 0.961, 0.011111105, 1.142987, none},
    {11.5, 1.017349, 1.004, 0.013349497, 1.312184, none},
    {12.5, 1.06066, 1.044, 0.016660172, 1.570736, none},
    {13.5, 1.10227, 1.083, 0.019270384, 1.748245, none},
};

const ValleyRow kTable6[] = {
    {1.5, 1.10227, 1.083, 0.01927, 1.748245, none},
    {2.5, 1.423025, 1.371, 0.052025, 3.655941, none},
    {3.5, 1.683746, 1.594, 0.089746, 5.330129, none},
    {4.5, 1.909188, 1.779, 0.130188, 6.81904, none},
    {5.5, 2.110687, 1.94, 0.170687, 8.086802, none},
    {6.5, 2.294559, 2.084, 0.210559, 9.176439, none},
    {7.5, 2.464752, 2.213, 0.251752, 10.21407, none},
    {8.5, 2.623928, 2.332, 0.291928, 11.12562, 1.6956},
    {9.5, 2.773986, 2.441, 0.332986, 12.00389, 1.7911},
    {10.5, 2.916333, 2.544, 0.372333, 12.76717, 1.8567},
    {11.5, 3.052048, 2.642, 0.410048, 13.43519, 1.9054},
    {12.5, 3.181981, 2.732, 0.449981, 14.14152, 1.9439},
    {13.5, 3.306811, 2.818, 0.488811, 14.78195, 1.9766},
};

const SettleCell kTable7[] = {
    {0.5, 1, 14, 3.86},   {0.5, 1, 1400, 4.344}, {0.5, 1, 14000, 4.39},
    {0.5, 2, 14, 5.63},   {0.5, 2, 1400, 5.64},  {0.5, 2, 14000, 5.64},
    {0.1, 1, 14, 4.08},   {0.1, 1, 1400, 4.18},  {0.1, 1, 14000, 4.33},
    {0.1, 2, 14, 5.596},  {0.1, 2, 1400, 5.646}, {0.1, 2, 14000, 5.647},
};

const TminCell kTable8[] = {
    {0.9, 1, 14, 1.05}, {0.9, 1, 1400, 0.19},  {0.9, 1, 14000, 0.09},
    {0.9, 2, 14, 0.2},  {0.9, 2, 1400, 0.022}, {0.9, 2, 14000, 0.007},
    {0.1, 1, 14, none}, {0.1, 1, 1400, 0.96},  {0.1, 1, 14000, 0.4},
    {0.1, 2, 14, 0.7},  {0.1, 2, 1400, 0.07},  {0.1, 2, 14000, 0.02},
};

const std::array<std::array<double, 5>, 6> kTable9{{
    {3.5, 3.14, 2.5, 2.3, 2},
    {5.24, 3.57, 3, 2.7, 2.5},
    {5.82, 3.6, 3.14, 2.8, 2.6},
    {6.28, 4, 3.3, 3, 2.8},
    {7.28, 7.25, 6.6, 6, 5.5},
    {12.4, 10.06, 9.08, 8.51, 8.08},
}};

const RatioBlockRow kTable10[] = {
    {500, 17, 2.04, 8.333333, 30, 4.89, 6.134969},
    {800, 21.7, 2.5, 8.68, 38, 5.83, 6.51801},
    {1000, 24.5, 2.7, 9.074074, 43, 6.33, 6.793049},
    {1330, 25.6, 2.82, 9.078014, 45.1, 6.56, 6.875},
    {1350, 26.8, 2.92, 9.178082, 47, 6.77, 6.942393},
    {1380, 27.8, 3.02, 9.205298, 48.8, 6.97, 7.001435},
    {2000, 35, 3.6, 9.722222, 61, 8.25, 7.393939},
    {3000, 43, 4.2, 10.2381, 75, 9.5, 7.894737},
    {4000, 49, 4.7, 10.42553, 87, 10.5, 8.285714},
    {10000, 79, 6.5, 12.15385, 142, 14.5, 9.793103},
    {12000, 87, 7.15, 12.16783, 155, 15.4, 10.06494},
    {14000, 93, 7.6, 12.23684, 165, 16.2, 10.18519},
    {30000, 144, 9.8, 14.69388, 235, 21, 11.19048},
    {40000, 161, 10.9, 14.77064, 275, 23.2, 11.85345},
    {50000, 175, 11.8, 14.83051, 305, 25, 12.2},
    {100000, 250, 15, 16.66667, 450, 32, 14.0625},
    {400000, 500, 24, 20.83333, 870, 52, 16.73077},
    {500000, 550, 26, 21.15385, 960, 55, 17.45455},
    {1000000, 750, 34, 22.05882, 1400, 70, 20},
    {5000000, 1800, 57, 31.57895, 3100, 120, 25.83333},
    {10000000, 2500, 72, 34.72222, 4300, 151, 28.47682},
};

const RatioBlockRow kTable11[] = {
    {0.0014, 0.0005, 0.004, 0.125, 0.0015, 0.011, 0.136},
    {0.014, 0.0045, 0.0125, 0.36, 0.013, 0.035, 0.37},
    {0.14, 0.044, 0.038, 1.157, 0.13, 0.11, 1.18},
};

} // namespace

ValleyTableInfo valley_table(int id) {
  switch (id) {
  case 1: return {1, 0.1, false, kTable1};
  case 2: return {2, 0.2, false, kTable2};
  case 3: return {3, 0.3, false, kTable3};
  case 4: return {4, 0.9, true, kTable4};
  case 5: return {5, 0.3, false, kTable5};
  case 6: return {6, 0.9, false, kTable6};
  default: throw InvalidParameter("no valley table with id " + std::to_string(id));
  }
}

std::span<const SettleCell> settle_cells() { return kTable7; }

std::span<const TminCell> tmin_cells() { return kTable8; }

const std::array<std::array<double, 5>, 6>& ratio_grid() { return kTable9; }

std::span<const RatioBlockRow> ratio_block(int id) {
  if (id == 10) return kTable10;
  if (id == 11) return kTable11;
  throw InvalidParameter("no ratio block table with id " + std::to_string(id));
}

} // namespace lmcost::reference
