#include "flagtoric/shape.hpp"

#include <algorithm>

#include "flagtoric/errors.hpp"

namespace flagtoric {

int FlagShape::n_at(int j) const {
    if (j <= 0) return 0;
    if (j > l()) return ambient;
    return steps[j - 1];
}

std::vector<int> FlagShape::blocks() const {
    std::vector<int> k(l() + 1);
    for (int j = 1; j <= l() + 1; ++j) k[j - 1] = n_at(j) - n_at(j - 1);
    return k;
}

long FlagShape::dimension() const {
    long d = 0;
    for (int i = 1; i <= l(); ++i)
        d += static_cast<long>(n_at(i) - n_at(i - 1)) * (ambient - n_at(i));
    return d;
}

FlagShape FlagShape::dual() const {
    std::vector<int> s;
    for (int i = l(); i >= 1; --i) s.push_back(ambient - steps[i - 1]);
    FlagShape d;
    d.steps = std::move(s);
    d.ambient = ambient;
    return d;
}

bool FlagShape::self_dual() const { return dual() == *this; }

std::string FlagShape::name() const {
    std::string s = "F(";
    for (int v : steps) s += std::to_string(v) + ",";
    s += std::to_string(ambient) + ")";
    return s;
}

std::string FlagShape::spec_string() const {
    std::string s;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(steps[i]);
    }
    s += "/" + std::to_string(ambient);
    return s;
}

FlagShape make_shape(std::vector<int> steps, int ambient) {
    if (steps.empty()) throw InvalidShape("at least one step required");
    for (size_t i = 0; i < steps.size(); ++i) {
        if (steps[i] <= 0) throw InvalidShape("steps must be positive");
        if (i > 0 && steps[i] <= steps[i - 1]) throw InvalidShape("steps must be strictly increasing");
    }
    if (steps.back() >= ambient) throw InvalidShape("ambient dimension must exceed the last step");
    FlagShape s;
    s.steps = std::move(steps);
    s.ambient = ambient;
    return s;
}

FlagShape parse_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        throw ParseError("missing '/' in shape \"" + text + "\"");
    std::vector<int> steps;
    size_t pos = 0;
    while (pos < slash) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos || end > slash) end = slash;
        if (end == pos) throw ParseError("empty step at position " + std::to_string(pos));
        int v = 0;
        for (size_t i = pos; i < end; ++i) {
            if (text[i] < '0' || text[i] > '9')
                throw ParseError("bad character at position " + std::to_string(i));
            v = v * 10 + (text[i] - '0');
        }
        steps.push_back(v);
        pos = end + (end < slash ? 1 : 0);
    }
    if (slash + 1 >= text.size()) throw ParseError("missing ambient dimension");
    int n = 0;
    for (size_t i = slash + 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw ParseError("bad character at position " + std::to_string(i));
        n = n * 10 + (text[i] - '0');
    }
    return make_shape(std::move(steps), n);
}

std::vector<FlagShape> all_shapes(int n) {
    std::vector<FlagShape> out;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> steps;
        for (int v = 1; v < n; ++v)
            if (mask & (1u << (v - 1))) steps.push_back(v);
        out.push_back(make_shape(std::move(steps), n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace flagtoric
