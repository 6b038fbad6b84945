#pragma once

#include <map>
#include <string>
#include <vector>

#include "spincurve/curve.hpp"

namespace spincurve {

// One curve per file, line-delimited text: a header, "meta key value"
// lines, then named "begin <array> ... end" blocks of one number per
// line. Numbers carry 17 significant digits so write -> read is exact.
struct CurveFile {
    int sphere_dim = 2;
    std::string kind = "profile";  // "profile" or "samples"
    Grid grid;
    std::vector<std::string> array_names;
    std::vector<std::vector<double>> arrays;
    std::map<std::string, std::string> metadata;

    const std::vector<double>& array(const std::string& name) const;
};

std::string format_number(double x);

CurveFile make_profile_file(const CurvatureProfile2& p);
CurveFile make_profile_file(const CurvatureProfile3& p);
CurveFile make_samples_file(const SampledCurve& c);

CurvatureProfile2 profile2_from_file(const CurveFile& f);
CurvatureProfile3 profile3_from_file(const CurveFile& f);
SampledCurve samples_from_file(const CurveFile& f);

void write_curve_file(const CurveFile& f, const std::string& path);
CurveFile read_curve_file(const std::string& path);

}  // namespace spincurve
