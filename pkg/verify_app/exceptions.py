from swapping_app.exceptions import SwapAlgebraError


class UnknownSuite(SwapAlgebraError):
    default_detail = 'No suite with this name.'
    default_code = 'unknown_suite'


class BadParams(SwapAlgebraError):
    """``errors`` keeps the serializer's field -> messages dict."""
    default_detail = 'Invalid suite parameters.'
    default_code = 'bad_params'

    def __init__(self, errors, code=None):
        self.errors = errors
        detail = '; '.join(f"{field}: {_messages(messages)}" for field, messages in errors.items())
        super().__init__(detail or None, code)


def _messages(messages):
    # list fields report their errors per item: {index: [message, ...]}
    if isinstance(messages, dict):
        return ' '.join(_messages(value) for value in messages.values())
    if isinstance(messages, (list, tuple)):
        return ' '.join(_messages(value) for value in messages)
    return str(messages)
