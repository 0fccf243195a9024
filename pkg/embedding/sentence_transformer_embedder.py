''' Local in-process embedding backend using sentence-transformers'''

from embedding.interface_embedder import IEmbedder


class SentenceTransformerEmbedder(IEmbedder):
    """Embeds texts with a locally loaded sentence-transformers model

    Optional backend: the model is downloaded on first use unless it was
    fetched beforehand with install.py.
    """
    DEFAULT_MODEL = 'all-MiniLM-L6-v2'

    def __init__(self, model_name=DEFAULT_MODEL, max_tokens=None):
        # imported here so the other backends work without torch
        from sentence_transformers import SentenceTransformer

        self.model_name = model_name
        self.sentence_embedding_model = SentenceTransformer(model_name)
        super().__init__(
            'local:' + model_name,
            max_tokens or self.sentence_embedding_model.max_seq_length,
            self.sentence_embedding_model
                .get_sentence_embedding_dimension())

    def _embed_raw(self, texts, ids):
        return list(self.sentence_embedding_model.encode(texts))
