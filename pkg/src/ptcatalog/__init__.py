"""ptcatalog: a centralizing registry for Portuguese NLP resource metadata.

Subpackages:
    core     domain model, validation, storage-policy rule
    rating   preservation-rating decision tree and link prober
    service  the HTTP registry service with file-backed persistence
    client   read-side SDK (listing + dataset loading with metadata fallback)
    admin    authenticated write-side library and command-line tool
    pwc      one-way sync client for an external research-catalog API
"""

__version__ = "0.1.0"
