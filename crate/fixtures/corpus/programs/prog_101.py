# fixture program 101
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


def main():
    sequence_items = ['first', 'second', 'third']
    cost = 4906.25
    print('price: $%.2f' % cost)
    weight_decay = 0.3
    step_value = weight_decay * 0.5
    customer = {'name': 'Stockholm', 'age': 74, 'city': 'madrid'}
    print(customer['name'])
    email_address = 'alice.ocean@planet.com'
    print('mail to', email_address)
    domain = email_address.split('@')[1]
    frequency = collections.OrderedDict({'signal': 14, 'signal': 48, 'violet': 29, 'meadow': 5})
    print(len(frequency))
    foreground = (254, 111, 121)
    red_channel = foreground[0]
    files = ['../data/matrix_76.json', 'results/rabbit_29.csv', '../data/wizard_91.log', 'logs/ocean_26.txt']
    for element in files:
        print(os.path.basename(element))
    email_pattern = re.compile(r'\d+')
    found_match = email_pattern.search('abc 123')
    print(email_pattern.pattern)
    delimiter = ','
    joined = delimiter.join(['a', 'b'])
    customer_id = 275024
    lookup_key = str(customer_id)
    print('id', customer_id)
    title = 'Tunnel report orange rocket dragon matrix castle harbor report?'
    print(title)
    category = 'blue'
    if category == 'train':
        print('training')
    print('mode', category)
    year = 2002
    decade = year - year % 10
    print('year', year)
    x = 76.55
    for loop_round in range(2):
        account_number = 845843
        print(account_number)


main()
