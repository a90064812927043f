#         Python H_Phi Embedding Library
#      Released under the MIT license
#

from .ClosedForm import ClosedForm
from .Quadrature import Quadrature


class ProbeError(Exception):
    """
    Exception thrown when attempting to select a Gaussian integration back-end,
    but no suitable valid back-end was found.
    """

    pass


class IntegratorManager:
    """
    Central integrator manager, selecting the back-end used to evaluate
    Gaussian integrals. The closed-form back-end is the default; the quadrature
    back-end is used to validate it.
    """

    INTEGRATORS = {
        ClosedForm.NAME: ClosedForm,
        Quadrature.NAME: Quadrature,
    }

    @classmethod
    def _get_integrator(cls, integrator, **options):
        """
        Creates a new integrator instance from the given back-end name. If no
        specific back-end is supplied, the first functional one is used.

        :param str integrator: Name of a supported back-end, None to autoprobe.

        :rtype: Integrator.* instance
        :return: Instance of an Integrator class
        """
        if integrator:
            integrator_class = cls.INTEGRATORS.get(integrator)

            if integrator_class is None:
                raise ProbeError("Unknown integration backend \"{}\".".format(integrator))

            try:
                integrator_class.probe()
                return integrator_class(**options)
            except Exception as integrator_error:
                raise ProbeError("Probe failed on integration backend \"{}\".".format(integrator), integrator_error)
        else:
            probe_errors = {}

            for integrator_name, integrator_class in cls.INTEGRATORS.items():
                try:
                    integrator_class.probe()
                    return integrator_class(**options)
                except Exception as integrator_error:
                    probe_errors[integrator_name] = integrator_error

            raise ProbeError("Probe failed to find any functional integration backend.", probe_errors)

    def __init__(self, integrator=None, **options):
        """
        Creates a new IntegratorManager.

        :param str integrator: name of the specific back-end to use, None to auto-probe.
        """
        self.integrator = self._get_integrator(integrator, **options)

    def integrate(self, integrand):
        """
        Integrates with the selected back-end.

        :rtype: GaussianIntegral
        """
        return self.integrator.integrate(integrand)

    @classmethod
    def names(cls):
        return list(cls.INTEGRATORS.keys())
