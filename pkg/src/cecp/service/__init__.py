"""HTTP service wrapping the analysis library.

``schemas`` defines the request/response models, ``operations`` implements
them on top of the core package, and ``app`` exposes the FastAPI
application. The CLI calls ``operations`` directly by default and speaks to
``app`` over HTTP when pointed at a running server; both paths execute the
same code, so their outputs are identical.

``app`` is intentionally not imported here so that in-process use of
``operations`` does not pay for the web-framework import.
"""
