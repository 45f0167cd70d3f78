"""
組み込み写像のカタログ。base_maps 以外のモジュールに CatalogEntry のサブクラスを置くと自動で登録される。
"""
