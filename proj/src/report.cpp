#include "quatcm/report.hpp"

namespace quatcm {

Rat degree_bound_general(unsigned g, const Rat& norm_alpha) {
    if (g == 0 || g % 2 != 0)
        throw std::invalid_argument("degree_bound_general: g must be even and positive");
    if (norm_alpha <= 0)
        throw std::invalid_argument("degree_bound_general: norm must be positive");
    return Rat(pow_int(4, g)) * norm_alpha * norm_alpha;
}

Int degree_bound_surface(const Int& c, const Int& d) {
    if (c <= 0 || d <= 0) throw std::invalid_argument("degree_bound_surface: need c, d > 0");
    Int n = 4 * c * c * d;
    return n * n;
}

Int degree_bound_tilde(const Int& c, const Int& d, const Int& m) {
    if (m <= 0) throw std::invalid_argument("degree_bound_tilde: need m > 0");
    return m * degree_bound_surface(c, d);
}

ReportRow assemble_report(const Int& discD, const ImagQuadField& L, const Int& c) {
    if (c <= 0) throw std::invalid_argument("assemble_report: conductor must be positive");
    ReportRow row;
    row.disc = discD;
    row.d = L.d;
    row.delta_L = L.disc();
    row.c = c;
    row.m0 = compute_m0(discD, L);
    row.s = (mod_floor(L.disc(), 8) == 5 && discD % 2 == 0) ? 1 : 0;
    row.splits = splits(L, discD);
    row.opt_embed_exists = optimal_embedding_exists(discD, L, c);
    row.h = class_number(c * c * L.disc());
    row.id_set_size = ideal_class_set(QuadOrder{L, c}).total_size();
    Rat general = degree_bound_general(2, Rat(4 * c * c * L.d));
    row.bound_general = general.get_num();
    row.bound_surface = degree_bound_surface(c, L.d);
    if (row.splits) {
        ThetaPair pair = find_theta_pair(discD, L);
        row.theta1 = pair.theta1;
        row.theta2 = pair.theta2;
        row.m_used = pair.m1;
        row.iso_flag = iso_criterion(discD, L);
        row.bound_tilde = degree_bound_tilde(c, L.d, pair.m1);
        if (discD == 1) row.annotation = "split algebra";
    } else {
        row.annotation = "not a splitting field";
    }
    return row;
}

const char* const kTabulateHeader =
    "disc,d,Delta_L,splits,m0,s,theta1,theta2,iso_flag,opt_embed_exists,h,id_set_size,"
    "bound_general,bound_surface,bound_tilde";

namespace {
std::string opt_str(const std::optional<Int>& v) { return v ? v->get_str() : std::string{}; }
std::string bool_str(bool b) { return b ? "true" : "false"; }
}  // namespace

std::string csv_line(const ReportRow& r) {
    std::string line;
    line += r.disc.get_str();
    line += ',' + r.d.get_str();
    line += ',' + r.delta_L.get_str();
    line += ',' + bool_str(r.splits);
    line += ',' + r.m0.get_str();
    line += ',' + std::to_string(r.s);
    line += ',' + opt_str(r.theta1);
    line += ',' + opt_str(r.theta2);
    line += ',';
    if (r.iso_flag) line += bool_str(*r.iso_flag);
    line += ',' + bool_str(r.opt_embed_exists);
    line += ',' + r.h.get_str();
    line += ',' + r.id_set_size.get_str();
    line += ',' + r.bound_general.get_str();
    line += ',' + r.bound_surface.get_str();
    line += ',' + opt_str(r.bound_tilde);
    return line;
}

std::string tabulate_csv(const std::vector<Int>& discs, long d_max, long c_max) {
    if (d_max < 1 || c_max < 1)
        throw std::invalid_argument("tabulate: bounds must be positive");
    std::string out = kTabulateHeader;
    out += '\n';
    for (const Int& disc : discs) {
        for (Int d = 1; d <= d_max; ++d) {
            if (!is_squarefree(d)) continue;
            ImagQuadField L{d};
            for (Int c = 1; c <= c_max; ++c) {
                out += csv_line(assemble_report(disc, L, c));
                out += '\n';
            }
        }
    }
    return out;
}

}  // namespace quatcm
