#pragma once

#include "krc/cartan.hpp"
#include "krc/pm_diagram.hpp"
#include "krc/tableaux.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace krc {

// The affine crystal on the disjoint union of classical components of B^{r,s}.
class KRCrystal {
public:
    static KRCrystal build(const AffineType& t, int r, int s, int max_vertices = 200000);

    const AffineType& type() const { return type_; }
    const ClassicalType& classical() const { return ct_; }
    int r() const { return r_; }
    int s() const { return s_; }
    int rank() const { return type_.n; }
    int size() const { return graph_.size(); }
    const CrystalGraph& graph() const { return graph_; }
    CrystalGraph& mutable_graph() { return graph_; }

    // Component shapes in vertex-id order; component(v) indexes into shapes().
    const std::vector<Partition>& shapes() const { return shapes_; }
    int component(int v) const { return comp_[v]; }

    int sigma(int v) const { return sigma_[v]; }
    std::optional<int> e(int i, int v) const;
    std::optional<int> f(int i, int v) const;
    int eps(int i, int v) const;
    int phi(int i, int v) const;
    Weight weight(int v) const { return word_weight(ct_, graph_.words[v]); }
    // m_i = phi_i - eps_i for i in I
    std::vector<int> affine_weight(int v) const;
    int level(int v) const;

    // Raise to the X_{n-1} highest weight element; ops are recorded in application order.
    int raise(int v, const std::vector<int>& colors, std::vector<int>* ops = nullptr) const;
    PMDiagram diagram(int v) const;
    Partition inner_shape(int v) const { return diagram(v).inner(); }
    // Dynkin labels (phi_i, i in colors) of the highest weight elements, sorted.
    std::vector<std::vector<int>> decompose(const std::vector<int>& colors) const;

    std::string to_json() const;
    std::string to_dot() const;

private:
    AffineType type_{Family::D1, 4};
    ClassicalType ct_{ClassicalKind::D, 4};
    int r_ = 0, s_ = 0;
    CrystalGraph graph_;
    std::vector<Partition> shapes_;
    std::vector<int> comp_;
    std::vector<int> sigma_;
    std::vector<std::shared_ptr<PhiTable>> tables_;
};

// Reject (t, r, s) outside the model; message on failure, empty on success.
std::string model_domain_error(const AffineType& t, int r, int s);

std::string graph_to_dot(const std::string& json_text);

}  // namespace krc

namespace krc {

struct CheckReport {
    bool pass = true;
    long checked = 0;
    std::vector<std::string> failures;  // first few witnesses

    void fail(std::string what);
};

// e/f inverse pairs, phi_i - eps_i = <h_i, wt>, level zero, connectedness, local rank-2 conditions.
CheckReport check_axioms(const AffineType& t, const CrystalGraph& g);
// sigma^2 = id, sigma commutes with colors 2..n, decomposition twist.
CheckReport check_sigma(const KRCrystal& k);
// Strict growth of inner shapes under e_0, e_1, e_0 e_1 on sign-free X_{n-2} highest weight pairs.
CheckReport check_containment(const KRCrystal& k);

}  // namespace krc
