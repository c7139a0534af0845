#pragma once

#include <stdexcept>
#include <string>

namespace tcsphere {

/// The parameter spaces the engine knows the cohomology of.
class BaseSpace {
public:
    enum class Kind { Point, Sphere, ComplexProjective, RealProjective };

    static BaseSpace point() { return BaseSpace(Kind::Point, 0); }

    static BaseSpace sphere(int m) {
        if (m < 1) throw std::invalid_argument("sphere dimension must be >= 1");
        return BaseSpace(Kind::Sphere, m);
    }

    static BaseSpace complex_projective(int n) {
        if (n < 1) throw std::invalid_argument("CP(n) requires n >= 1");
        return BaseSpace(Kind::ComplexProjective, n);
    }

    static BaseSpace real_projective(int n) {
        if (n < 1) throw std::invalid_argument("RP(n) requires n >= 1");
        return BaseSpace(Kind::RealProjective, n);
    }

    Kind kind() const { return kind_; }

    /// m for S(m), n for CP(n) and RP(n), 0 for the point.
    int parameter() const { return param_; }

    int dim() const {
        switch (kind_) {
            case Kind::Point: return 0;
            case Kind::Sphere: return param_;
            case Kind::ComplexProjective: return 2 * param_;
            case Kind::RealProjective: return param_;
        }
        return 0;
    }

    // S(1) = RP(1) is the circle.
    bool simply_connected() const {
        switch (kind_) {
            case Kind::Point: return true;
            case Kind::Sphere: return param_ >= 2;
            case Kind::ComplexProjective: return true;
            case Kind::RealProjective: return false;
        }
        return false;
    }

    /// True when the integral cohomology has no torsion and is modelled by the engine.
    bool integral_model_available() const { return kind_ != Kind::RealProjective; }

    std::string to_string() const {
        switch (kind_) {
            case Kind::Point: return "pt";
            case Kind::Sphere: return "S(" + std::to_string(param_) + ")";
            case Kind::ComplexProjective: return "CP(" + std::to_string(param_) + ")";
            case Kind::RealProjective: return "RP(" + std::to_string(param_) + ")";
        }
        return "?";
    }

    friend bool operator==(const BaseSpace&, const BaseSpace&) = default;

private:
    BaseSpace(Kind kind, int param) : kind_(kind), param_(param) {}

    Kind kind_;
    int param_;
};

}  // namespace tcsphere
