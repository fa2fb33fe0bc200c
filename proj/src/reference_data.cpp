#include "fskan/reference_data.hpp"

namespace fskan {

namespace {

std::vector<VelocityPoint> blasius_velocity() {
    return {{0.1, 0.3892354},  {0.2, 0.72239923}, {0.3, 0.91901667}, {0.4, 0.98646615},
            {0.5, 0.99877239}, {0.6, 0.9999285},  {0.7, 0.99998388}, {0.8, 0.99998522},
            {0.9, 0.99998524}, {1.0, 0.99998524}};
}

std::vector<VelocityPoint> homann_velocity() {
    return {{0.1, 0.51841208}, {0.2, 0.81685809}, {0.3, 0.9483164},  {0.4, 0.98969146},
            {0.5, 0.99859956}, {0.6, 0.99988001}, {0.7, 1.00000237}, {0.8, 1.00001151},
            {0.9, 1.00001353}, {1.0, 1.00001527}};
}

std::vector<VelocityPoint> hiemenz_velocity() {
    return {{0.1, 0.73864188}, {0.2, 0.9583553},  {0.3, 0.99623432}, {0.4, 0.99975182},
            {0.5, 0.99987682}, {0.6, 0.99982269}, {0.7, 0.99975239}, {0.8, 0.99966988},
            {0.9, 0.99957522}, {1.0, 0.9994684}};
}

std::vector<VelocityPoint> axisym_velocity() {
    return {{0.1, 0.52720714}, {0.2, 0.82558612}, {0.3, 0.95299636}, {0.4, 0.99120424},
            {0.5, 0.998896},   {0.6, 0.99990906}, {0.7, 0.999995},   {0.8, 0.99999962},
            {0.9, 0.99999975}, {1.0, 0.99999972}};
}

std::vector<VelocityPoint> decelerating_velocity() {
    return {{0.1, 0.25214592}, {0.2, 0.57886782}, {0.3, 0.84962283}, {0.4, 0.97107618},
            {0.5, 0.9972818},  {0.6, 0.99987996}, {0.7, 0.99999732}, {0.8, 0.99999974},
            {0.9, 0.99999978}, {1.0, 0.99999979}};
}

std::vector<ReferenceRecord> build_records() {
    // columns: jaya alpha, jaya eta_inf, Zhang, Asaithambi, PSO, Hyperband, GA
    std::vector<ReferenceRecord> r;
    r.push_back({"blasius", {0.5, 0.0}, 0.332057, 11.856964, 0.33205, 0.33205, 0.33204,
                 0.33142, 0.33215, blasius_velocity()});
    r.push_back({"homann", {2.0, 1.0}, 1.311938, 4.840246, 1.31194, 1.31194, 1.31185,
                 1.31222, 1.31199, homann_velocity()});
    r.push_back({"accelerating-b2", {1.0, 2.0}, 1.687218, 4.547123, 1.68721, 1.68721,
                 1.68772, 1.68723, 1.68688, {}});
    r.push_back({"hiemenz", {1.0, 1.0}, 1.232588, 9.078257, 1.23258, 1.23258, 1.23254,
                 1.23228, 1.23257, hiemenz_velocity()});
    r.push_back({"axisym-stagnation", {1.0, 0.5}, 0.927680, 6.995320, 0.92768, 0.92768,
                 0.92764, 0.92674, 0.92797, axisym_velocity()});
    r.push_back({"flat-b0-1", {1.0, 0.0}, 0.469600, 10.746206, 0.46960, 0.46960, 0.46957,
                 0.47009, 0.46973, {}});
    r.push_back({"decel-0.10", {1.0, -0.1}, 0.319270, 8.181430, 0.31927, 0.31927, 0.31925,
                 0.31815, 0.31945, {}});
    r.push_back({"decel-0.15", {1.0, -0.15}, 0.216361, 8.975579, 0.21636, 0.21636, 0.21636,
                 0.21646, 0.21377, decelerating_velocity()});
    r.push_back({"decel-0.18", {1.0, -0.18}, 0.128636, 11.999854, 0.12863, 0.12863, 0.12864,
                 0.13208, 0.12884, {}});
    r.push_back({"decel-0.1988", {1.0, -0.1988}, 0.005218, 11.999793, 0.00522, 0.00522,
                 0.00559, 0.00509, 0.00513, {}});
    return r;
}

}  // namespace

const std::vector<ReferenceRecord>& reference_records() {
    static const std::vector<ReferenceRecord> records = build_records();
    return records;
}

double alpha_column(const ReferenceRecord& record, Algorithm alg) {
    switch (alg) {
        case Algorithm::jaya: return record.alpha_jaya;
        case Algorithm::pso: return record.alpha_pso;
        case Algorithm::ga: return record.alpha_ga;
        case Algorithm::hyperband: return record.alpha_hyperband;
    }
    return record.alpha_jaya;
}

}  // namespace fskan
