# fixture program 186
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
start_time = datetime.datetime(2008, 12, 3, 8, 56)
print(start_time.year)
iso = start_time.isoformat()
start_time = datetime.datetime(2022, 9, 8, 0, 0)
numbers = [2014, 2030, 2019, 2025, 2014, 2010, 2028, 2016, 2015, 2020, 2007, 2024]
for element in numbers:
    print(element)
numbers.append(1)
age_years = 26
age_group = age_years // 10
age_years = 78
end_year = 1992
print('year', end_year)
end_year = 2022
years = list(range(1986, 1988))
first_entry = years[0]
print(len(years))
end_index = 235
end_index = end_index + 1
print(sequence_items[end_index % 3])
predictor = DecisionTree(depth=4)
prediction = predictor.predict([1, 2, 3])
predictor = DecisionTree(depth=4)
record = {'name': 'Dave', 'age': 20, 'city': 'london'}
print(record['name'])
record = {'name': 'Erin Meadow', 'age': 12, 'city': 'berlin'}
entries = [('candle', 96), ('anchor', 36), ('orange', 52)]
print(len(entries))
for element in entries:
    print(element[0])
output_file = 'output/silver_49.xml'
print(os.path.basename(output_file))
word_counts = {'report': 31, 'dragon': 8, 'saddle': 20, 'vector': 21, 'zebra': 8, 'planet': 6}
print(len(word_counts))
for dict_key in word_counts:
    print(dict_key)
i = 257
for loop_round in range(2):
    epsilon = 0.001
    print(epsilon)
