#pragma once

#include <complex>
#include <functional>
#include <string>

#include "ranklss/errors.hpp"

namespace ranklss {

/// Test function of a linear spectral statistic. Contour routes evaluate it
/// at complex points, so custom functions supply a complex evaluator.
class FunctionDescriptor {
public:
    enum class Kind { power, log, custom };
    using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

    static FunctionDescriptor power(int k) {
        if (k < 1) throw InvalidArgument("power exponent must be a positive integer");
        FunctionDescriptor f;
        f.kind_ = Kind::power;
        f.exponent_ = k;
        return f;
    }

    static FunctionDescriptor log() {
        FunctionDescriptor f;
        f.kind_ = Kind::log;
        return f;
    }

    static FunctionDescriptor custom(std::string name, ComplexFn fn) {
        if (!fn) throw InvalidArgument("custom function descriptor needs an evaluator");
        FunctionDescriptor f;
        f.kind_ = Kind::custom;
        f.name_ = std::move(name);
        f.fn_ = std::move(fn);
        return f;
    }

    /// Parses the CLI spellings "x", "x2", "x4", "xk" and "log".
    static FunctionDescriptor parse(const std::string& s) {
        if (s == "log") return log();
        if (s == "x") return power(1);
        if (s.size() >= 2 && s[0] == 'x') {
            int k = 0;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9' || k > 1000) throw InvalidArgument("unknown function '" + s + "'");
                k = 10 * k + (s[i] - '0');
            }
            return power(k);
        }
        throw InvalidArgument("unknown function '" + s + "' (expected x, x<k> or log)");
    }

    Kind kind() const noexcept { return kind_; }
    int exponent() const noexcept { return exponent_; }

    std::string name() const {
        switch (kind_) {
            case Kind::power: return exponent_ == 1 ? "x" : "x" + std::to_string(exponent_);
            case Kind::log: return "log";
            case Kind::custom: return name_;
        }
        return {};
    }

    std::complex<double> operator()(std::complex<double> z) const {
        switch (kind_) {
            case Kind::power: {
                std::complex<double> r = 1.0;
                for (int i = 0; i < exponent_; ++i) r *= z;
                return r;
            }
            case Kind::log: return std::log(z);
            case Kind::custom: return fn_(z);
        }
        return {};
    }

    double operator()(double x) const {
        switch (kind_) {
            case Kind::power: {
                double r = 1.0;
                for (int i = 0; i < exponent_; ++i) r *= x;
                return r;
            }
            case Kind::log:
                if (!(x > 0.0)) throw DomainError("log evaluated at nonpositive point");
                return std::log(x);
            case Kind::custom: return fn_(std::complex<double>(x, 0.0)).real();
        }
        return 0.0;
    }

private:
    FunctionDescriptor() = default;

    Kind kind_ = Kind::power;
    int exponent_ = 1;
    std::string name_;
    ComplexFn fn_;
};

}  // namespace ranklss
