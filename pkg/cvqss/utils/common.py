from typing import Any, Callable
import functools
import numpy as np
import torch


def coerce_numpy(func: Callable) -> Callable:
    """Allows user to pass numpy arguments to a torch function and auto-converts back to
    numpy at the end.

    Numpy arrays become float64 tensors. Zero-dimensional tensors come back as python
    floats when the caller passed numpy.
    """

    @functools.wraps(func)
    def make_torch_args(*args, **kwargs):
        is_numpy = any(isinstance(arg, np.ndarray) for arg in args) or any(
            isinstance(arg, np.ndarray) for arg in kwargs.values()
        )
        update_args = [recursive_make_torch(arg) for arg in args]
        update_kwargs = {kw: recursive_make_torch(arg) for kw, arg in kwargs.items()}

        output = func(*update_args, **update_kwargs)

        if is_numpy:
            output = recursive_make_numpy(output)

        return output

    return make_torch_args


def as_tensor(item: Any) -> torch.Tensor:
    """Float64 tensor view of an array-like."""
    if isinstance(item, torch.Tensor):
        return item.to(torch.float64)
    return torch.as_tensor(np.asarray(item, dtype=np.float64))


def recursive_make_torch(item):
    if isinstance(item, np.ndarray):
        return torch.from_numpy(np.asarray(item, dtype=np.float64))
    elif isinstance(item, (tuple, list)):
        return type(item)(recursive_make_torch(el) for el in item)
    elif isinstance(item, dict):
        return {kw: recursive_make_torch(arg) for kw, arg in item.items()}
    else:
        return item


def recursive_make_numpy(item):
    if isinstance(item, torch.Tensor):
        if item.dim() == 0:
            return item.item()
        return item.detach().cpu().numpy()
    elif isinstance(item, (tuple, list)):
        return type(item)(recursive_make_numpy(el) for el in item)
    elif isinstance(item, dict):
        return {kw: recursive_make_numpy(arg) for kw, arg in item.items()}
    else:
        return item
