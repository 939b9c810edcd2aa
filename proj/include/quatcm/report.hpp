#pragma once

#include <optional>
#include <string>

#include "quatcm/classgrp.hpp"
#include "quatcm/thetasearch.hpp"

namespace quatcm {

// 4^g * norm_alpha^2 for even g.
Rat degree_bound_general(unsigned g, const Rat& norm_alpha);

// (4 c^2 d)^2, the surface case with alpha = 2c sqrt(-d).
Int degree_bound_surface(const Int& c, const Int& d);

// m * (4 c^2 d)^2, the composite bound through an extra degree-m isogeny.
Int degree_bound_tilde(const Int& c, const Int& d, const Int& m);

/*
 * One assembled result row for a (disc, d, c) triple.  Fields that only make
 * sense for splitting fields stay empty otherwise; the three candidate
 * degree bounds are reported side by side and never reconciled.
 */
struct ReportRow {
    Int disc;
    Int d;
    Int delta_L;
    Int c;
    bool splits = false;
    Int m0;
    int s = 0;
    std::optional<Int> theta1, theta2;
    std::optional<Int> m_used;
    std::optional<bool> iso_flag;
    bool opt_embed_exists = false;
    Int h;
    Int id_set_size;
    Int bound_general;
    Int bound_surface;
    std::optional<Int> bound_tilde;
    std::string annotation;
};

ReportRow assemble_report(const Int& discD, const ImagQuadField& L, const Int& c);

// Fixed CSV header shared by the CLI and the tabulation below.
extern const char* const kTabulateHeader;

std::string csv_line(const ReportRow& row);

// Deterministic tabulation over discs x {squarefree d <= d_max} x {c <= c_max}.
std::string tabulate_csv(const std::vector<Int>& discs, long d_max, long c_max);

}  // namespace quatcm
