"""
Service d'opérations sur les fibrés scindés formels
Somme, produit tensoriel, λ-opérations, puissances symétriques, Adams
et modèle K(S^{2n})
"""
import logging
from typing import List

from kcalc.exceptions import InvalidParameterError, DimensionMismatchError
from kcalc.ktheory.models.bundle import SphereKElement, VirtualSplitBundle

logger = logging.getLogger(__name__)

BundleSeries = List[VirtualSplitBundle]


class BundleOperationsService:
    """Service de calcul dans l'anneau de Grothendieck des fibrés scindés"""

    # ------------------------------------------------------------------
    # Structure d'anneau
    # ------------------------------------------------------------------

    @staticmethod
    def _align(v: VirtualSplitBundle, w: VirtualSplitBundle):
        width = max(v.base_lines, w.base_lines)
        return v.padded(width), w.padded(width), width

    def bundle_sum(self, v: VirtualSplitBundle, w: VirtualSplitBundle) -> VirtualSplitBundle:
        """Somme directe V ⊕ W (multiplicités additionnées, termes nuls supprimés)"""
        v, w, width = self._align(v, w)
        return VirtualSplitBundle(width, v.terms + w.terms)

    def bundle_negate(self, v: VirtualSplitBundle) -> VirtualSplitBundle:
        return VirtualSplitBundle(v.base_lines, tuple((-m, line) for m, line in v.terms))

    def bundle_difference(self, v: VirtualSplitBundle, w: VirtualSplitBundle) -> VirtualSplitBundle:
        """Classe virtuelle [V] - [W]"""
        return self.bundle_sum(v, self.bundle_negate(w))

    def bundle_scale(self, v: VirtualSplitBundle, factor: int) -> VirtualSplitBundle:
        return VirtualSplitBundle(v.base_lines, tuple((factor * m, line) for m, line in v.terms))

    def bundle_tensor(self, v: VirtualSplitBundle, w: VirtualSplitBundle) -> VirtualSplitBundle:
        """Produit tensoriel, extension bilinéaire de L ⊗ L' = exposants additionnés"""
        v, w, width = self._align(v, w)
        terms = [
            (m1 * m2, l1.tensor(l2))
            for m1, l1 in v.terms
            for m2, l2 in w.terms
        ]
        return VirtualSplitBundle(width, tuple(terms))

    def tensor_power(self, v: VirtualSplitBundle, k: int) -> VirtualSplitBundle:
        """V^{⊗k}, avec V^{⊗0} = fibré trivial de rang 1"""
        if k < 0:
            raise InvalidParameterError(f"Puissance tensorielle négative: {k}", parameter='k')
        result = VirtualSplitBundle.trivial(1, v.base_lines)
        for _ in range(k):
            result = self.bundle_tensor(result, v)
        return result

    # ------------------------------------------------------------------
    # Séries génératrices λ_t et S_t
    # ------------------------------------------------------------------

    def series_product(self, f: BundleSeries, g: BundleSeries, order: int) -> BundleSeries:
        """Produit de séries en t à coefficients fibrés, tronqué en t^order"""
        width = max([s.base_lines for s in f + g] or [0])
        out = [VirtualSplitBundle.zero(width) for _ in range(order + 1)]
        for i, fi in enumerate(f[:order + 1]):
            if fi.is_zero:
                continue
            for j, gj in enumerate(g[:order + 1 - i]):
                if not gj.is_zero:
                    out[i + j] = self.bundle_sum(out[i + j], self.bundle_tensor(fi, gj))
        return out

    def _unit_series(self, base_lines: int, order: int) -> BundleSeries:
        return [VirtualSplitBundle.trivial(1, base_lines)] + [
            VirtualSplitBundle.zero(base_lines) for _ in range(order)
        ]

    def _effective_series(self, v: VirtualSplitBundle, order: int, symmetric: bool, sign: int) -> BundleSeries:
        """Π (1 + sign·tL)^m ou Π (1 + sign·tL + t²L² + ...)^m sur un fibré effectif"""
        series = self._unit_series(v.base_lines, order)
        for mult, line in v.terms:
            factor = [VirtualSplitBundle.trivial(1, v.base_lines)]
            top = order if symmetric else 1
            for i in range(1, order + 1):
                if i <= top:
                    factor.append(VirtualSplitBundle(v.base_lines, ((sign ** i, line.power(i)),)))
                else:
                    factor.append(VirtualSplitBundle.zero(v.base_lines))
            for _ in range(mult):
                series = self.series_product(series, factor, order)
        return series

    def lambda_series(self, v: VirtualSplitBundle, order: int) -> BundleSeries:
        """
        Série λ_t(V) = Σ t^k λ^k(V) tronquée en t^order

        Pour V = P - Q: λ_t(V) = λ_t(P)·S_{-t}(Q), c'est-à-dire
        λ^k(V) = Σ_{i+j=k} (-1)^j λ^i(P) S^j(Q).
        """
        positive = self._effective_series(v.positive_part(), order, symmetric=False, sign=1)
        negative = self._effective_series(v.negative_part(), order, symmetric=True, sign=-1)
        return self.series_product(positive, negative, order)

    def sym_series(self, v: VirtualSplitBundle, order: int) -> BundleSeries:
        """Série S_t(V) tronquée en t^order, S_t(P - Q) = S_t(P)·λ_{-t}(Q)"""
        positive = self._effective_series(v.positive_part(), order, symmetric=True, sign=1)
        negative = self._effective_series(v.negative_part(), order, symmetric=False, sign=-1)
        return self.series_product(positive, negative, order)

    def negate_variable(self, series: BundleSeries) -> BundleSeries:
        """f(t) -> f(-t)"""
        return [s if i % 2 == 0 else self.bundle_negate(s) for i, s in enumerate(series)]

    def lambda_op(self, v: VirtualSplitBundle, k: int) -> VirtualSplitBundle:
        """
        k-ième puissance extérieure λ^k(V)

        Args:
            v: Fibré virtuel
            k: Ordre (k >= 0)

        Returns:
            VirtualSplitBundle, λ^0 = 1
        """
        if k < 0:
            raise InvalidParameterError(f"λ^{k}: k >= 0 requis", parameter='k')
        return self.lambda_series(v, k)[k]

    def sym_op(self, v: VirtualSplitBundle, k: int) -> VirtualSplitBundle:
        """k-ième puissance symétrique S^k(V), S^0 = 1 et S^k(L) = L^{⊗k}"""
        if k < 0:
            raise InvalidParameterError(f"S^{k}: k >= 0 requis", parameter='k')
        return self.sym_series(v, k)[k]

    # ------------------------------------------------------------------
    # Opérations d'Adams
    # ------------------------------------------------------------------

    def adams_op(self, v: VirtualSplitBundle, k: int) -> VirtualSplitBundle:
        """ψ^k(V): chaque monôme L est remplacé par L^k"""
        if k < 1:
            raise InvalidParameterError(f"ψ^{k}: k >= 1 requis", parameter='k')
        return VirtualSplitBundle(v.base_lines, tuple((m, line.power(k)) for m, line in v.terms))

    def adams_via_lambda(self, v: VirtualSplitBundle, k: int) -> VirtualSplitBundle:
        """
        ψ^k par la relation de Newton dans le λ-anneau, sans toucher aux monômes:
        ψ^k = Σ_{i<k} (-1)^{i-1} λ^i ψ^{k-i} + (-1)^{k-1} k λ^k
        """
        if k < 1:
            raise InvalidParameterError(f"ψ^{k}: k >= 1 requis", parameter='k')
        lambdas = self.lambda_series(v, k)
        adams = [None, lambdas[1]]
        for j in range(2, k + 1):
            total = self.bundle_scale(lambdas[j], (-1) ** (j - 1) * j)
            for i in range(1, j):
                term = self.bundle_tensor(lambdas[i], adams[j - i])
                total = self.bundle_sum(total, self.bundle_scale(term, (-1) ** (i - 1)))
            adams.append(total)
        return adams[k]

    # ------------------------------------------------------------------
    # Classes réduites et isomorphisme stable
    # ------------------------------------------------------------------

    def reduced_class(self, v: VirtualSplitBundle) -> VirtualSplitBundle:
        """V - dim V, élément de K̃"""
        return self.bundle_difference(v, VirtualSplitBundle.trivial(v.dim, v.base_lines))

    def similar(self, v: VirtualSplitBundle, w: VirtualSplitBundle) -> bool:
        """V ⊕ C^n = W ⊕ C^m pour certains n, m (même classe réduite)"""
        v, w, _ = self._align(v, w)
        return self.reduced_class(v) == self.reduced_class(w)

    def stably_isomorphic(self, v: VirtualSplitBundle, w: VirtualSplitBundle) -> bool:
        """V ⊕ C^n = W ⊕ C^n pour un même n (égalité des classes dans K)"""
        v, w, _ = self._align(v, w)
        return self.bundle_difference(v, w).is_zero

    # ------------------------------------------------------------------
    # Modèle K(S^{2n})
    # ------------------------------------------------------------------

    def sphere_adams(self, e: SphereKElement, k: int) -> SphereKElement:
        """ψ^k(a + b·u) = a + k^n·b·u"""
        if k < 1:
            raise InvalidParameterError(f"ψ^{k}: k >= 1 requis", parameter='k')
        return SphereKElement(e.n, e.a, k ** e.n * e.b)

    def sphere_product(self, e: SphereKElement, f: SphereKElement) -> SphereKElement:
        """Produit dans K(S^{2n}) avec u² = 0"""
        if e.n != f.n:
            raise DimensionMismatchError("Produit sur des sphères différentes", expected=e.n, actual=f.n)
        return SphereKElement(e.n, e.a * f.a, e.a * f.b + e.b * f.a)

    def sphere_smash(self, e: SphereKElement, f: SphereKElement) -> SphereKElement:
        """Produit externe des parties réduites: u_n ∧ u_m = u_{n+m}"""
        return SphereKElement(e.n + f.n, 0, e.b * f.b)
