'''
    Install dependencies after installing requirements.txt

    Downloads the sentence-transformers model used by the local:<model>
    embedding backend, so the first run does not fetch it.
'''
import sys

from embedding.sentence_transformer_embedder import \
    SentenceTransformerEmbedder

if __name__ == '__main__':
    model_name = sys.argv[1] if len(sys.argv) > 1 \
        else SentenceTransformerEmbedder.DEFAULT_MODEL
    # loading the model once stores it in the local cache
    SentenceTransformerEmbedder(model_name)
