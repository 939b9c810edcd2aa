#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quatcm/classgrp.hpp"
#include "quatcm/report.hpp"
#include "quatcm/tensor.hpp"

using json = nlohmann::ordered_json;
using namespace quatcm;

namespace {

constexpr const char* kSchema = "quatcm/1";

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

std::array<Rat, 4> parse_coords(const std::string& s) {
    std::array<Rat, 4> out;
    std::stringstream ss(s);
    std::string item;
    size_t k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= 4) throw std::invalid_argument("expected four comma-separated coordinates");
        out[k++] = parse_rat(item);
    }
    if (k != 4) throw std::invalid_argument("expected four comma-separated coordinates");
    return out;
}

json element_json(const QuatElement& x) {
    json a = json::array();
    for (size_t k = 0; k < 4; ++k) a.push_back(x[k].get_str());
    return a;
}

json form_json(const QuadForm& f) {
    return json::array({f.a.get_str(), f.b.get_str(), f.c.get_str()});
}

json row_json(const ReportRow& r) {
    json j;
    j["disc"] = r.disc.get_str();
    j["d"] = r.d.get_str();
    j["Delta_L"] = r.delta_L.get_str();
    j["c"] = r.c.get_str();
    j["splits"] = r.splits;
    j["m0"] = r.m0.get_str();
    j["s"] = r.s;
    j["theta1"] = r.theta1 ? json(r.theta1->get_str()) : json();
    j["theta2"] = r.theta2 ? json(r.theta2->get_str()) : json();
    j["m_used"] = r.m_used ? json(r.m_used->get_str()) : json();
    j["iso_flag"] = r.iso_flag ? json(*r.iso_flag) : json();
    j["opt_embed_exists"] = r.opt_embed_exists;
    j["h"] = r.h.get_str();
    j["id_set_size"] = r.id_set_size.get_str();
    j["bound_general"] = r.bound_general.get_str();
    j["bound_surface"] = r.bound_surface.get_str();
    j["bound_tilde"] = r.bound_tilde ? json(r.bound_tilde->get_str()) : json();
    if (!r.annotation.empty()) j["annotation"] = r.annotation;
    return j;
}

std::vector<Int> parse_disc_list(const std::string& s) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.empty()) throw std::invalid_argument("empty discriminant list");
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + output_path);
    out << text;
}

QuatAlgebra integral_algebra(const std::string& a_str, const std::string& b_str) {
    return QuatAlgebra{Rat(parse_int(a_str)), Rat(parse_int(b_str))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quatcm: exact invariants of quaternion algebras with complex multiplication"};
    app.require_subcommand(1);

    std::string opt_a, opt_b, opt_p, opt_g, opt_d, opt_c, opt_disc, opt_delta;
    std::string opt_disc_list, opt_format = "json", opt_output;
    long opt_dmax = 0, opt_cmax = 0;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a,b)_p");
    hilbert->add_option("-a", opt_a, "first entry")->required();
    hilbert->add_option("-b", opt_b, "second entry")->required();
    hilbert->add_option("-p", opt_p, "finite prime")->required();
    hilbert->add_option("--output", opt_output);

    auto* disc = app.add_subcommand("disc", "ramified places and discriminant of (a,b/Q)");
    disc->add_option("-a", opt_a)->required();
    disc->add_option("-b", opt_b)->required();
    disc->add_option("--output", opt_output);

    auto* splits_cmd = app.add_subcommand("splits", "does Q(sqrt(-d)) split the algebra");
    splits_cmd->add_option("--d", opt_d, "squarefree d > 0")->required();
    splits_cmd->add_option("--disc", opt_disc, "algebra discriminant");
    splits_cmd->add_option("-a", opt_a);
    splits_cmd->add_option("-b", opt_b);
    splits_cmd->add_option("--output", opt_output);

    auto* theta = app.add_subcommand("theta", "coprime presentation pair for (disc, d)");
    theta->add_option("--disc", opt_disc)->required();
    theta->add_option("--d", opt_d)->required();
    theta->add_option("--output", opt_output);

    auto* idem = app.add_subcommand("idempotent", "idempotent attached to a trace-zero element");
    idem->add_option("-a", opt_a)->required();
    idem->add_option("-b", opt_b)->required();
    idem->add_option("--g", opt_g, "coordinates x0,x1,x2,x3")->required();
    idem->add_option("--output", opt_output);

    auto* ident = app.add_subcommand("identities", "product identities for the idempotent pair");
    ident->add_option("-a", opt_a)->required();
    ident->add_option("-b", opt_b)->required();
    ident->add_option("--g", opt_g, "coordinates x0,x1,x2,x3")->required();
    ident->add_option("--output", opt_output);

    auto* order_cmd = app.add_subcommand("order", "maximal order of (a,b/Q), integral a,b");
    order_cmd->add_option("-a", opt_a)->required();
    order_cmd->add_option("-b", opt_b)->required();
    order_cmd->add_option("--output", opt_output);

    auto* embed = app.add_subcommand("embed", "conductor of the order cut out by g");
    embed->add_option("-a", opt_a)->required();
    embed->add_option("-b", opt_b)->required();
    embed->add_option("--g", opt_g, "coordinates x0,x1,x2,x3")->required();
    embed->add_option("--d", opt_d, "squarefree d > 0")->required();
    embed->add_option("--output", opt_output);

    auto* cg = app.add_subcommand("classgroup", "reduced forms of a negative discriminant");
    cg->add_option("--delta", opt_delta, "negative discriminant");
    cg->add_option("--d", opt_d, "squarefree d > 0");
    cg->add_option("--c", opt_c, "conductor");
    cg->add_option("--output", opt_output);

    auto* idealset = app.add_subcommand("idealset", "conductor strata of Id(O_{L,c})");
    idealset->add_option("--d", opt_d)->required();
    idealset->add_option("--c", opt_c)->required();
    idealset->add_option("--output", opt_output);

    auto* bounds = app.add_subcommand("bounds", "degree bounds and assembled invariants");
    bounds->add_option("--disc", opt_disc)->required();
    bounds->add_option("--d", opt_d)->required();
    bounds->add_option("--c", opt_c)->required();
    bounds->add_option("--output", opt_output);

    auto* tab = app.add_subcommand("tabulate", "batch table over (disc, d, c)");
    tab->add_option("--disc", opt_disc_list, "comma-separated discriminants")->required();
    tab->add_option("--d-max", opt_dmax, "largest d")->required();
    tab->add_option("--c-max", opt_cmax, "largest conductor")->required();
    tab->add_option("--format", opt_format, "json|csv");
    tab->add_option("--output", opt_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*hilbert) {
            int v = hilbert_formula(parse_int(opt_a), parse_int(opt_b), parse_int(opt_p));
            emit(std::to_string(v) + "\n", opt_output);
            return 0;
        }
        if (*disc) {
            QuatAlgebra D{parse_rat(opt_a), parse_rat(opt_b)};
            RamificationSet sigma = ramification_set(D);
            json j;
            j["schema"] = kSchema;
            j["a"] = D.a.get_str();
            j["b"] = D.b.get_str();
            json ps = json::array();
            for (const Int& p : sigma.primes) ps.push_back(p.get_str());
            j["primes"] = ps;
            j["infinite"] = sigma.includes_infinity;
            j["disc"] = disc_of(D).get_str();
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*splits_cmd) {
            ImagQuadField L{parse_int(opt_d)};
            Int discD;
            if (!opt_disc.empty()) {
                discD = parse_int(opt_disc);
            } else if (!opt_a.empty() && !opt_b.empty()) {
                discD = disc_of(QuatAlgebra{parse_rat(opt_a), parse_rat(opt_b)});
            } else {
                throw std::invalid_argument("splits: give --disc or both -a and -b");
            }
            json j;
            j["schema"] = kSchema;
            j["d"] = L.d.get_str();
            j["Delta_L"] = L.disc().get_str();
            j["disc"] = discD.get_str();
            j["splits"] = splits(L, discD);
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*theta) {
            ImagQuadField L{parse_int(opt_d)};
            Int discD = parse_int(opt_disc);
            ThetaPair pair = find_theta_pair(discD, L);
            json j;
            j["schema"] = kSchema;
            j["disc"] = discD.get_str();
            j["d"] = L.d.get_str();
            j["Delta_L"] = L.disc().get_str();
            j["m0"] = pair.m0.get_str();
            j["s"] = pair.s;
            j["m_pair"] = json::array({pair.m1.get_str(), pair.m2.get_str()});
            j["theta_pair"] = json::array({pair.theta1.get_str(), pair.theta2.get_str()});
            bool verified = check_theta(pair.theta1, discD, L).verdict &&
                            check_theta(pair.theta2, discD, L).verdict;
            j["verified"] = verified;
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*idem || *ident) {
            QuatAlgebra D{parse_rat(opt_a), parse_rat(opt_b)};
            Embedding g = embedding_from_element(QuatElement{D, parse_coords(opt_g)});
            TensorAlgebra M{D, g.delta};
            Idempotent e = idempotent_from_embedding(M, g);
            json j;
            j["schema"] = kSchema;
            j["delta"] = g.delta.get_str();
            if (*idem) {
                j["x1"] = element_json(e.element().a());
                j["x2"] = element_json(e.element().b());
            } else {
                IotaIdentityReport rep = verify_iota_identities(g, e);
                j["id1"] = rep.id1;
                j["id2"] = rep.id2;
                j["id3"] = rep.id3;
                j["id4"] = rep.id4;
                j["aux"] = rep.aux;
                j["all"] = rep.all();
            }
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*order_cmd) {
            QuatAlgebra D = integral_algebra(opt_a, opt_b);
            QuatOrderD O = maximal_order(D);
            json j;
            j["schema"] = kSchema;
            j["a"] = D.a.get_str();
            j["b"] = D.b.get_str();
            j["disc"] = disc_of(D).get_str();
            json basis = json::array();
            for (const QuatElement& x : O.lattice().basis()) basis.push_back(element_json(x));
            j["basis"] = basis;
            j["reduced_discriminant"] = reduced_discriminant(O).get_str();
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*embed) {
            QuatAlgebra D = integral_algebra(opt_a, opt_b);
            ImagQuadField L{parse_int(opt_d)};
            Embedding g = embedding_from_element(QuatElement{D, parse_coords(opt_g)});
            QuatOrderD O = maximal_order(D);
            Int c = embedding_conductor(O, g, L);
            json j;
            j["schema"] = kSchema;
            j["d"] = L.d.get_str();
            j["delta"] = g.delta.get_str();
            j["conductor"] = c.get_str();
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*cg) {
            Int delta;
            if (!opt_delta.empty()) {
                delta = parse_int(opt_delta);
            } else if (!opt_d.empty() && !opt_c.empty()) {
                QuadOrder o{ImagQuadField{parse_int(opt_d)}, parse_int(opt_c)};
                delta = o.disc();
            } else {
                throw std::invalid_argument("classgroup: give --delta or both --d and --c");
            }
            ClassGroup grp = class_group_of_discriminant(delta);
            json j;
            j["schema"] = kSchema;
            j["disc"] = delta.get_str();
            j["h"] = grp.order().get_str();
            json forms = json::array();
            for (const QuadForm& f : grp.elements) forms.push_back(form_json(f));
            j["forms"] = forms;
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*idealset) {
            QuadOrder o{ImagQuadField{parse_int(opt_d)}, parse_int(opt_c)};
            IdealClassSet set = ideal_class_set(o);
            json j;
            j["schema"] = kSchema;
            j["d"] = o.L.d.get_str();
            j["c"] = o.c.get_str();
            json strata = json::array();
            for (const auto& [cp, grp] : set.strata) {
                json s;
                s["conductor"] = cp.get_str();
                s["disc"] = grp.disc.get_str();
                s["h"] = grp.order().get_str();
                json forms = json::array();
                for (const QuadForm& f : grp.elements) forms.push_back(form_json(f));
                s["forms"] = forms;
                strata.push_back(s);
            }
            j["strata"] = strata;
            j["total"] = set.total_size().get_str();
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*bounds) {
            ImagQuadField L{parse_int(opt_d)};
            ReportRow row = assemble_report(parse_int(opt_disc), L, parse_int(opt_c));
            json j;
            j["schema"] = kSchema;
            j.update(row_json(row));
            emit(j.dump(2) + "\n", opt_output);
            return 0;
        }
        if (*tab) {
            std::vector<Int> discs = parse_disc_list(opt_disc_list);
            if (opt_format == "csv") {
                emit(tabulate_csv(discs, opt_dmax, opt_cmax), opt_output);
            } else if (opt_format == "json") {
                json j;
                j["schema"] = kSchema;
                json rows = json::array();
                for (const Int& discD : discs) {
                    for (Int d = 1; d <= opt_dmax; ++d) {
                        if (!is_squarefree(d)) continue;
                        ImagQuadField L{d};
                        for (Int c = 1; c <= opt_cmax; ++c)
                            rows.push_back(row_json(assemble_report(discD, L, c)));
                    }
                }
                j["rows"] = rows;
                emit(j.dump(2) + "\n", opt_output);
            } else {
                throw std::invalid_argument("tabulate: format must be json or csv");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
