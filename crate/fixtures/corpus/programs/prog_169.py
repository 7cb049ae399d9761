# fixture program 169
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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
epsilon = 0.001
step_value = epsilon * 0.5
numbers_range = range(2, 25)
print(list(numbers_range)[:3])
temperature = 203.98
rounded = round(temperature, 1)
file_names = ['../data/summer_88.log', 'input/ocean_67.log', 'input/meadow_25.tsv']
for element in file_names:
    print(os.path.basename(element))
file_names = ['logs/harbor_56.parquet', 'input/bridge_29.xml', 'results/dragon_6.txt']
download_url = 'https://silver.io/matrix/392'
host = download_url.split('/')[2]
print('GET', download_url)
stopword_list = ['judy', 'erin', 'erin', 'peggy', 'ivan']
for element in stopword_list:
    print(element)
stopword_list.append('extra')
stopword_list = ['paris', 'prague', 'paris', 'london', 'oslo', 'stockholm', 'stockholm']
vector = np.round(np.linspace(0, 1, 4), 3)
vector = vector + 1
print(vector.mean())
sender = 'peggy.needle@rabbit.com'
domain = sender.split('@')[1]
print('mail to', sender)
balance = decimal.Decimal('4737.76')
print('balance', balance)
balance = decimal.Decimal('104.98')
matrix = np.zeros((2, 4))
matrix = matrix * 2
total = matrix.sum()
success = False
if not success:
    print('no')
if success:
    print('yes')
scores = [106, 124]
total = sum(scores)
for element in scores:
    print(element)
api_key = 'ChS7ZaC2XFdYG14iFzS'
masked = '*' * len(api_key)
profile = {'name': 'Oslo', 'age': 77, 'city': 'warsaw'}
print(profile['name'])
feature_name = 'summer'
lookup = {feature_name: 0}
print('column', feature_name)
k = 189
fn = 'data/ladder_34.parquet'
a = 7
for loop_round in range(3):
    latitude = 198.3
    print(latitude)
