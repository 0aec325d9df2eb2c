#include "groupcore/perm.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace groupcore {

Perm Perm::from_images(const std::vector<int>& images) {
    Perm p;
    p.im.reserve(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= (int)images.size() || seen[v])
            throw std::runtime_error("Perm: invalid image list");
        seen[v] = true;
        p.im.push_back((std::uint8_t)v);
    }
    return p;
}

Perm Perm::from_cycles(int degree, const std::string& cycles) {
    Perm p(degree);
    size_t i = 0;
    while (i < cycles.size()) {
        if (cycles[i] != '(') { i++; continue; }
        i++;
        std::vector<int> cyc;
        std::string num;
        while (i < cycles.size() && cycles[i] != ')') {
            if (isdigit((unsigned char)cycles[i])) num += cycles[i];
            else if (!num.empty()) { cyc.push_back(std::stoi(num) - 1); num.clear(); }
            i++;
        }
        if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
        i++;
        for (size_t k = 0; k < cyc.size(); k++) {
            int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
            if (a < 0 || a >= degree) throw std::runtime_error("Perm: point out of range");
            p.im[a] = (std::uint8_t)b;
        }
    }
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); i++)
        if (im[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    r.im.resize(im.size());
    for (size_t i = 0; i < im.size(); i++) r.im[i] = o.im[im[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.im.resize(im.size());
    for (size_t i = 0; i < im.size(); i++) r.im[im[i]] = (std::uint8_t)i;
    return r;
}

long Perm::order() const {
    long ord = 1;
    std::vector<bool> seen(im.size(), false);
    for (size_t i = 0; i < im.size(); i++) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = im[j];
            len++;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

bool Perm::even() const {
    int transpositions = 0;
    std::vector<bool> seen(im.size(), false);
    for (size_t i = 0; i < im.size(); i++) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = im[j];
            len++;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

std::uint64_t Perm::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint8_t v : im) h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

std::string Perm::to_string() const {
    std::ostringstream os;
    std::vector<bool> seen(im.size(), false);
    bool any = false;
    for (size_t i = 0; i < im.size(); i++) {
        if (seen[i] || im[i] == i) { seen[i] = true; continue; }
        os << "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : " ") << (j + 1);
            first = false;
            j = im[j];
        }
        os << ")";
        any = true;
    }
    return any ? os.str() : "()";
}

}  // namespace groupcore
