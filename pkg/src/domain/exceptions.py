class ToricDegreeError(Exception):
    """Erro base de todo o pacote"""


class InterpolationError(ToricDegreeError, ValueError):
    pass


class SeriesWindowError(ToricDegreeError):
    """Coeficiente pedido fora da janela garantida de uma série truncada"""


class PolytopeError(ToricDegreeError, ValueError):
    """Entrada geométrica inválida (vazia, dimensão inconsistente, família desconhecida)"""


class NotSimpleError(PolytopeError):
    pass


class NotSmoothError(PolytopeError):
    pass


class DegenerateSpecializationError(ToricDegreeError, ValueError):
    """Especialização com polo de ordem indeterminada (x_a = 0 ou ξ não genérico)"""


class ConsistencyError(ToricDegreeError):
    """Verificação cruzada interna falhou; indica bug, nunca dado válido"""


class ResourceLimitError(ToricDegreeError):
    pass


class PolytopeFileError(ToricDegreeError):
    """Erro de leitura de arquivo de polítopo, com localização"""

    def __init__(self, message: str, location: str = ""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ConfigurationError(ToricDegreeError):
    pass
