#include "hylab/quadrature.hpp"
#include "hylab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace hylab {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (QUADPACK dqk15 values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    Complex value;
    double error;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fv[15];
    // abscissae ordering: 0..6 pairs, 7 is the center
    Complex resk{0.0, 0.0}, resg{0.0, 0.0};
    const Complex fc = f(c);
    resk = kWgk[7] * fc;
    resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const Complex f1 = f(c - dx);
        const Complex f2 = f(c + dx);
        fv[j] = f1;
        fv[7 + j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const Complex mean = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[7 + j] - mean));
    resasc *= h;
    resabs *= h;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {resk * h, err};
}

struct Segment {
    double a, b;
    Complex value;
    double error;
    int depth;
};

QuadResult adaptive(const Integrand& f, double a, double b, const QuadratureScheme& q) {
    if (a == b) return {Complex{0.0, 0.0}, 0.0, 0};
    long evals = 15;
    PanelResult first = gk15(f, a, b);
    std::vector<Segment> heap{{a, b, first.value, first.error, 0}};
    auto cmp = [](const Segment& s1, const Segment& s2) { return s1.error < s2.error; };
    std::make_heap(heap.begin(), heap.end(), cmp);
    Complex total = first.value;
    double err = first.error;
    // refine worst panel until the global estimate meets tolerance
    while (err > std::max(q.abs_tol, q.rel_tol * std::abs(total)) && !heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Segment worst = heap.back();
        heap.pop_back();
        if (worst.depth >= q.max_depth) {
            // can't split further; put it back and stop
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), cmp);
            break;
        }
        const double m = 0.5 * (worst.a + worst.b);
        PanelResult left = gk15(f, worst.a, m);
        PanelResult right = gk15(f, m, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push_back({worst.a, m, left.value, left.error, worst.depth + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
        heap.push_back({m, worst.b, right.value, right.error, worst.depth + 1});
        std::push_heap(heap.begin(), heap.end(), cmp);
        if (evals > 40'000'000)
            throw QuadratureError("adaptive quadrature exceeded evaluation budget");
    }
    // recompute the error sum to avoid cancellation drift
    err = 0.0;
    for (const auto& s : heap) err += s.error;
    if (!(err <= std::max(q.abs_tol, q.rel_tol * std::abs(total)) * 50.0 + 1e-300))
        throw QuadratureError("adaptive quadrature did not reach tolerance (err=" +
                              std::to_string(err) + ")");
    return {total, err, evals};
}

} // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureScheme& q) {
    return adaptive(f, a, b, q);
}

QuadResult integrate_oscillatory(const Integrand& f, double a, double b, double freq,
                                 const QuadratureScheme& q) {
    const double span = b - a;
    if (span <= 0.0) return {};
    double period = std::abs(freq) > 0 ? 2.0 * M_PI / std::abs(freq) : span;
    double chunk = std::min(span, period);
    int nchunks = static_cast<int>(std::ceil(span / chunk));
    nchunks = std::min(nchunks, 4'000'000);
    QuadratureScheme qc = q;
    qc.abs_tol = std::max(q.abs_tol / nchunks, 1e-300);
    QuadResult out;
    for (int i = 0; i < nchunks; ++i) {
        const double x0 = a + span * i / nchunks;
        const double x1 = a + span * (i + 1) / nchunks;
        QuadResult r = adaptive(f, x0, x1, qc);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
    }
    return out;
}

QuadResult integrate_halfline(const Integrand& f, double decay, double freq,
                              const QuadratureScheme& q) {
    if (!(decay > 0.0)) throw DivergentIntegralError("half-line integral needs positive decay rate");
    // exp(-decay*T) below tolerance, with headroom for the algebraic prefactor
    const double T = (std::log(1.0 / std::max(q.rel_tol, 1e-16)) + 12.0) / decay;
    return integrate_oscillatory(f, 0.0, T, freq, q);
}

QuadResult integrate_line(const Integrand& f, double decay, double freq,
                          const QuadratureScheme& q) {
    if (!(decay > 0.0)) throw DivergentIntegralError("line integral needs positive decay rate");
    const double T = (std::log(1.0 / std::max(q.rel_tol, 1e-16)) + 12.0) / decay;
    return integrate_oscillatory(f, -T, T, freq, q);
}

double integrate_real(const RealIntegrand& f, double a, double b, const QuadratureScheme& q) {
    QuadResult r = integrate([&f](double t) { return Complex(f(t), 0.0); }, a, b, q);
    return r.value.real();
}

const GaussLaguerre& GaussLaguerre::cached(int n) {
    static std::map<int, GaussLaguerre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLaguerre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    // Newton iteration on L_n with standard starting guesses (Stroud-Secrest).
    double x = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0)
            x = 3.0 / (1.0 + 2.4 * n);
        else if (i == 1)
            x += 15.0 / (1.0 + 2.5 * n);
        else
            x += (1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1)) * (x - gl.nodes[i - 2]);
        double p1 = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1 - x) * p2 - j * p3) / (j + 1);
            }
            const double pp = n * (p1 - p2) / x;
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        gl.nodes[i] = x;
        // recompute L_{n-1}(x) for the weight
        double p1w = 1.0, p2w = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p3 = p2w;
            p2w = p1w;
            p1w = ((2 * j + 1 - x) * p2w - j * p3) / (j + 1);
        }
        // w_i = x_i / ((n+1)^2 [L_{n+1}(x_i)]^2)
        const double pnp1 = ((2 * n + 1 - x) * p1w - n * p2w) / (n + 1);
        gl.weights[i] = x / ((n + 1.0) * (n + 1.0) * pnp1 * pnp1);
    }
    auto [pos, inserted] = cache.emplace(n, std::move(gl));
    return pos->second;
}

Complex GaussLaguerre::apply(const Integrand& g) const {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * g(nodes[i]);
    return s;
}

} // namespace hylab
