from dataclasses import asdict, dataclass

from utils.config import Config

@dataclass(frozen=True)
class Settings:
    '''Numeric knobs handed to every family; a plain value so survey workers can receive it'''
    cap: int = 2_000_000
    dense_cap: int = 5000
    eig_tol: float = 1e-8
    trivial_tol: float = 1e-8
    iter_tol: float = 1e-10
    iter_maxiter: int = 5000
    max_reseeds: int = 8
    mixing_samples: int = 20000

    @classmethod
    def from_config(cls, config: Config = None, **overrides) -> "Settings":
        config = config or Config()
        values = dict(
            cap=config.enumeration_cap,
            dense_cap=config.dense_cap,
            eig_tol=config.eig_tol,
            trivial_tol=config.trivial_tol,
            iter_tol=config.iter_tol,
            iter_maxiter=config.iter_maxiter,
            max_reseeds=config.max_reseeds,
            mixing_samples=config.mixing_samples,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def spectral_kwargs(self, seed: int = 0) -> dict:
        return dict(dense_cap=self.dense_cap, eig_tol=self.eig_tol, trivial_tol=self.trivial_tol,
                    iter_tol=self.iter_tol, iter_maxiter=self.iter_maxiter, seed=seed,
                    mixing_samples=self.mixing_samples)

    def to_dict(self) -> dict:
        return asdict(self)
