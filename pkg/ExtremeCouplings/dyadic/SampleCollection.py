import pandas as pd
import pandera as pa
from coupling_config import get_config
from .DyadicSpec import DyadicSpec

"""
Classe que representa uma amostra de pares (xi', eta') pronta para ser escrita em CSV, com o DF sendo os dados em si e
os outros campos sendo metadados da geração (parâmetros, seed e profundidade das expansões)
"""


class SampleCollection:
   """
   Conjunto de pares amostrados de F_p aplicado às expansões diádicas. O DF tem exatamente as colunas de
   SAMPLE_CSV_COLUMNS, floats em [0,1]
   """
   spec:DyadicSpec
   seed:int
   sample_depth:int
   df:pd.DataFrame

   #schema dos dataframes de amostras, força as colunas a serem floats no intervalo unitário
   DF_SCHEMA = pa.DataFrameSchema(
      columns={
         name: pa.Column(float, pa.Check.in_range(0.0, 1.0)) for name in get_config("SAMPLE_CSV_COLUMNS")
      },
      strict=True,
      index=pa.Index(int)
   )

   def __init__(self, spec:DyadicSpec, seed:int, sample_depth:int, df:pd.DataFrame) -> None:
      df = self.DF_SCHEMA.validate(df)
      self.spec = spec
      self.seed = seed
      self.sample_depth = sample_depth
      self.df = df[get_config("SAMPLE_CSV_COLUMNS")].copy()

   def __len__(self) -> int:
      return len(self.df)

   def to_csv(self, target) -> None:
      """
      Escreve o CSV com cabeçalho e 17 dígitos significativos, independente do locale
      """
      digits:int = get_config("CSV_SIGNIFICANT_DIGITS")
      self.df.to_csv(target, index=False, float_format=f"%.{digits}g", lineterminator="\n")

   def __str__(self) -> str:
      return f"""
            Amostra de F_p com p = {self.spec.p},\n
            Pares: {len(self.df)},\n
            Seed: {self.seed},\n
            Profundidade das expansões: {self.sample_depth}\n
            """
