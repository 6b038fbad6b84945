#include "spincurve/curve_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "spincurve/errors.hpp"

namespace spincurve {

namespace {

constexpr const char* kSignature = "spincurve-curve 1";

double parse_number(const std::string& s, const std::string& where) {
    char* end = nullptr;
    double x = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw IOError("curve file: bad number '" + s + "' in " + where);
    return x;
}

std::vector<std::string> expected_arrays(int sphere_dim, const std::string& kind) {
    if (kind == "profile") {
        if (sphere_dim == 2) return {"speed", "curvature"};
        return {"speed", "curvature", "torsion"};
    }
    std::vector<std::string> names;
    for (int i = 1; i <= sphere_dim + 1; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

void validate(const CurveFile& f) {
    if (f.sphere_dim != 2 && f.sphere_dim != 3)
        throw IOError("curve file: sphere_dim must be 2 or 3");
    if (f.kind != "profile" && f.kind != "samples")
        throw IOError("curve file: kind must be profile or samples");
    if (f.grid.n < 16) throw IOError("curve file: need n >= 16");
    std::vector<std::string> names = expected_arrays(f.sphere_dim, f.kind);
    if (f.array_names != names) throw IOError("curve file: unexpected array set");
    for (const auto& a : f.arrays)
        if (static_cast<int>(a.size()) != f.grid.size())
            throw IOError("curve file: array length must be n + 1");
    if (f.kind == "profile")
        for (double v : f.arrays[0])
            if (!(v > 0)) throw IOError("curve file: profile speed must be positive");
}

}  // namespace

const std::vector<double>& CurveFile::array(const std::string& name) const {
    for (size_t i = 0; i < array_names.size(); ++i)
        if (array_names[i] == name) return arrays[i];
    throw IOError("curve file: missing array " + name);
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

CurveFile make_profile_file(const CurvatureProfile2& p) {
    CurveFile f;
    f.sphere_dim = 2;
    f.kind = "profile";
    f.grid = p.grid;
    f.array_names = {"speed", "curvature"};
    f.arrays = {p.v, p.kappa};
    return f;
}

CurveFile make_profile_file(const CurvatureProfile3& p) {
    CurveFile f;
    f.sphere_dim = 3;
    f.kind = "profile";
    f.grid = p.grid;
    f.array_names = {"speed", "curvature", "torsion"};
    f.arrays = {p.v, p.kappa, p.tau};
    return f;
}

CurveFile make_samples_file(const SampledCurve& c) {
    CurveFile f;
    f.sphere_dim = c.sphere_dim;
    f.kind = "samples";
    f.grid = c.grid;
    f.array_names = expected_arrays(c.sphere_dim, "samples");
    f.arrays.assign(f.array_names.size(), {});
    for (const auto& p : c.points)
        for (size_t d = 0; d < f.arrays.size(); ++d) f.arrays[d].push_back(p(d));
    return f;
}

CurvatureProfile2 profile2_from_file(const CurveFile& f) {
    if (f.sphere_dim != 2 || f.kind != "profile")
        throw IOError("curve file: expected an S^2 profile");
    return {f.grid, f.array("speed"), f.array("curvature")};
}

CurvatureProfile3 profile3_from_file(const CurveFile& f) {
    if (f.sphere_dim != 3 || f.kind != "profile")
        throw IOError("curve file: expected an S^3 profile");
    return {f.grid, f.array("speed"), f.array("curvature"), f.array("torsion")};
}

SampledCurve samples_from_file(const CurveFile& f) {
    if (f.kind != "samples") throw IOError("curve file: expected curve samples");
    SampledCurve c;
    c.sphere_dim = f.sphere_dim;
    c.grid = f.grid;
    for (int i = 0; i < f.grid.size(); ++i) {
        Eigen::VectorXd p(f.sphere_dim + 1);
        for (int d = 0; d <= f.sphere_dim; ++d) p(d) = f.arrays[d][i];
        c.points.push_back(p);
    }
    return c;
}

void write_curve_file(const CurveFile& f, const std::string& path) {
    validate(f);
    std::ofstream out(path);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << kSignature << "\n";
    out << "sphere_dim " << f.sphere_dim << "\n";
    out << "kind " << f.kind << "\n";
    out << "n " << f.grid.n << "\n";
    for (const auto& [key, value] : f.metadata) out << "meta " << key << " " << value << "\n";
    for (size_t a = 0; a < f.arrays.size(); ++a) {
        out << "begin " << f.array_names[a] << "\n";
        for (double x : f.arrays[a]) out << format_number(x) << "\n";
        out << "end\n";
    }
    if (!out) throw IOError("write failed for " + path);
}

CurveFile read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kSignature)
        throw IOError("curve file: bad signature in " + path);

    CurveFile f;
    f.array_names.clear();
    bool have_n = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "sphere_dim") {
            ls >> f.sphere_dim;
        } else if (tag == "kind") {
            ls >> f.kind;
        } else if (tag == "n") {
            int n = 0;
            ls >> n;
            if (!ls || n < 16) throw IOError("curve file: bad n in " + path);
            f.grid = Grid(n);
            have_n = true;
        } else if (tag == "meta") {
            std::string key;
            ls >> key;
            std::string value;
            std::getline(ls, value);
            if (!value.empty() && value.front() == ' ') value.erase(0, 1);
            f.metadata[key] = value;
        } else if (tag == "begin") {
            if (!have_n) throw IOError("curve file: array before n in " + path);
            std::string name;
            ls >> name;
            std::vector<double> values;
            while (std::getline(in, line) && line != "end")
                values.push_back(parse_number(line, name));
            if (line != "end") throw IOError("curve file: unterminated array " + name);
            f.array_names.push_back(name);
            f.arrays.push_back(std::move(values));
        } else {
            throw IOError("curve file: unknown directive '" + tag + "' in " + path);
        }
    }
    validate(f);
    return f;
}

}  // namespace spincurve
