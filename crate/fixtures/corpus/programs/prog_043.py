# fixture program 043
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
results_table = pd.DataFrame({'city': [74, 82, 24, 77, 87], 'age': [18, 18, 27, 54, 30]})
print(results_table.columns.tolist())
end_date = '1999-09-24'
print('date', end_date)
log_files = ['data/silver_50.txt', 'output/ladder_29.txt', 'logs/signal_23.xml', 'output/harbor_22.tsv', '../data/vector_18.txt']
print(len(log_files), 'files')
for element in log_files:
    print(os.path.basename(element))
employee = {'name': 'Oscar', 'age': 37, 'city': 'oslo'}
print(employee['name'])
email_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = email_pattern.search('abc 123')
print(email_pattern.pattern)
comment = 'Quartz garden island number meadow summer stone dragon orange!'
word_list = comment.split()
row_index = 112
row_index = row_index + 1
encoded = 'Silver orange harbor'.encode()
print(len(encoded))
model_dir = pathlib.Path('models/matrix')
target_file = model_dir / 'out.csv'
print(model_dir.name)
age = 53
print('age', age)
age_group = age // 10
column = 'yellow_id'
print('column', column)
lookup = {column: 0}
for loop_round in range(3):
    weight = 173.4
    print(weight)
